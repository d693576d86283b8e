# Writes data/catalog.json. Spectra are class element orders from the GAP character table library.
import json
import os
ATLAS = "ATLAS of Finite Groups (Conway et al., 1985)"
CTBL = "GAP character table library: class element orders"
def ext(name, out, mu): return {"name": name, "out_order": out, "mu": mu}
def fw(k, c, cite): return {"kernel_order": k, "complement_order": c, "citation": cite}
F73 = lambda where: fw(7, 3, f"Frobenius subgroup 7:3 ({where})")
F43 = lambda where: fw(4, 3, f"Frobenius subgroup 2^2:3 = A4 ({where})")
F94 = lambda where: fw(9, 4, f"Frobenius subgroup 3^2:4 ({where})")
F87 = lambda where: fw(8, 7, f"Frobenius subgroup 2^3:7 ({where})")
F115 = lambda where: fw(11, 5, f"Frobenius subgroup 11:5 ({where})")

R = []
def rec(name, factors, out, outs, mu, exts, wit=(), facts=(), gens=None):
    order = 1
    for p, e in factors: order *= p ** e
    r = {"name": name, "order": str(order), "order_factors": [list(f) for f in factors],
         "out_order": out, "out_structure": outs, "mu": mu,
         "extensions": exts, "extensions_complete": True,
         "frobenius_witnesses": list(wit), "module_facts": list(facts),
         "citations": [f"order and Out(S): {ATLAS}", f"mu(S) and mu of extensions: {CTBL}"]}
    if gens: r["generators"] = gens
    R.append(r)

mod2 = "reduction to an elementary abelian chief factor N of characteristic 2 on which G/N acts"
mod5 = "reduction to an elementary abelian chief factor N of characteristic 5 on which G/N acts"

rec("A5", [(2,2),(3,1),(5,1)], 2, "2", [2,3,5], [ext("A5.2",2,[4,5,6])],
    [F43("point stabiliser A4")], gens="generators/a5.gens")
rec("L2(7)", [(2,3),(3,1),(7,1)], 2, "2", [3,4,7], [ext("L2(7).2",2,[6,7,8])],
    [F43("inside S4"), F73("Borel subgroup")],
    [{"group": "L2(7)", "quotients": ["L2(7)", "L2(7).2"], "characteristic": 5,
      "statement": {"kind": "ForcedOrderAmong", "orders": [20]},
      "citation": "GAP MeatAxe over GF(5): every irreducible L2(7)-module has a nonzero vector fixed by an element of order 4",
      "assumptions": [mod5]}],
    gens="generators/l2-7.gens")
rec("A6", [(2,3),(3,2),(5,1)], 4, "2^2", [3,4,5],
    [ext("A6.2_1",2,[4,5,6]), ext("A6.2_2",2,[3,8,10]), ext("A6.2_3",2,[3,5,8]), ext("A6.2^2",4,[6,8,10])],
    [F43("inside A5")], gens="generators/a6.gens")
rec("L2(8)", [(2,3),(3,2),(7,1)], 3, "3", [2,7,9], [ext("L2(8).3",3,[6,7,9])],
    [F87("Borel subgroup")], gens="generators/l2-8.gens")
rec("L2(11)", [(2,2),(3,1),(5,1),(11,1)], 2, "2", [5,6,11], [ext("L2(11).2",2,[10,11,12])],
    [F115("Borel subgroup")], gens="generators/l2-11.gens")
rec("A7", [(2,3),(3,2),(5,1),(7,1)], 2, "2", [4,5,6,7], [ext("A7.2",2,[7,10,12])],
    [F73("normaliser of a Sylow 7-subgroup"), F43("inside A4 x 3"), F94("inside (A4 x 3):2 on the 3+3 split")],
    gens="generators/a7.gens")
rec("U3(3)", [(2,5),(3,3),(7,1)], 2, "2", [7,8,12], [ext("U3(3).2",2,[7,8,12])],
    [F43("inside L2(7)"), F73("inside L2(7)")],
    [{"group": "U3(3)", "quotients": ["U3(3)", "U3(3).2"], "characteristic": 5,
      "statement": {"kind": "ForcedOrderAmong", "orders": [20]},
      "citation": "GAP MeatAxe over GF(5): every irreducible U3(3)-module has a nonzero vector fixed by an element of order 4",
      "assumptions": [mod5]}],
    gens="generators/u3-3.gens")
rec("M11", [(2,4),(3,2),(5,1),(11,1)], 1, "1", [5,6,8,11], [],
    [F115("normaliser of a Sylow 11-subgroup")], gens="generators/m11.gens")
rec("A8", [(2,6),(3,2),(5,1),(7,1)], 2, "2", [4,6,7,15], [ext("A8.2",2,[7,8,10,12,15])],
    [F73("inside A7"), F43("inside A7"), F94("inside A7")],
    [{"group": "A8", "quotients": ["A8.2"], "characteristic": 2,
      "statement": {"kind": "ForcedDimensions", "dimensions": [6, 8, 40]},
      "context_absent": [30],
      "citation": "2-modular Brauer characters of S8: in every other irreducible module an element of order 15 centralises an involution",
      "assumptions": [mod2]},
     {"group": "A8", "quotients": ["A8.2"], "characteristic": 2, "dimension": 6,
      "statement": {"kind": "CosetOrderDoubling", "class": "10A", "order": 10},
      "matrices": ["modules/s8-6-10a-1.mat"],
      "citation": "6-dimensional GF(2)-module of S8: f(t) = 1 + t + ... + t^9 is nonzero for t in class 10A",
      "assumptions": [mod2]},
     {"group": "A8", "quotients": ["A8.2"], "characteristic": 2, "dimension": 40,
      "statement": {"kind": "CosetOrderDoubling", "class": "10A", "order": 10},
      "citation": "40-dimensional GF(2)-module of S8: f(t) = 1 + t + ... + t^9 is nonzero for t in class 10A (computed from representation data)",
      "assumptions": [mod2]},
     {"group": "A8", "quotients": ["A8.2"], "characteristic": 2, "dimension": 8,
      "statement": {"kind": "FixedPointFreeClass", "class": "3A", "order": 3, "absent_order": 24},
      "matrices": ["modules/s8-8-3a-1.mat"],
      "axioms": ["higman-l2-2m"],
      "citation": "8-dimensional GF(2)-module of S8: class 3A acts fixed-point-freely, so N is elementary abelian and 24 is not an element order",
      "assumptions": [mod2]}],
    gens="generators/a8.gens")
rec("L3(4)", [(2,6),(3,2),(5,1),(7,1)], 12, "D12", [3,4,5,7],
    [ext("L3(4).2_1",2,[5,6,7,8]), ext("L3(4).2_2",2,[5,6,8,14]), ext("L3(4).2_3",2,[6,7,8,10]),
     ext("L3(4).3",3,[4,6,15,21]), ext("L3(4).6",6,[8,12,15,21]), ext("L3(4).2^2",4,[6,8,10,14]),
     ext("L3(4).3.2_2",6,[6,8,14,15,21]), ext("L3(4).3.2_3",6,[6,8,10,15,21]),
     ext("L3(4).D12",12,[8,10,12,14,15,21])],
    [F73("normaliser of a Sylow 7-subgroup"), fw(16, 5, "Frobenius subgroup 2^4:5 (inside 2^4:A5)")],
    gens="generators/l3-4.gens")
rec("U4(2)", [(2,6),(3,4),(5,1)], 2, "2", [5,9,12], [ext("U4(2).2",2,[8,9,10,12])],
    [F43("inside A5")], gens="generators/u4-2.gens")
rec("L2(49)", [(2,4),(3,1),(5,2),(7,2)], 4, "2^2", [7,24,25],
    [ext("L2(49).2_1",2,[7,48,50]), ext("L2(49).2_2",2,[14,24,25]), ext("L2(49).2_3",2,[7,16,24,25]),
     ext("L2(49).2^2",4,[14,48,50])],
    [], gens="generators/l2-49.gens")
rec("M12", [(2,6),(3,3),(5,1),(11,1)], 2, "2", [6,8,10,11], [ext("M12.2",2,[8,10,11,12])],
    [F115("inside L2(11)")],
    [{"group": "M12", "quotients": ["M12", "M12.2"], "characteristic": 2,
      "statement": {"kind": "ForcedDimensions", "dimensions": [10]},
      "context_absent": [22],
      "citation": "2-modular Brauer characters of M12: every other absolutely irreducible module yields an element of order 22",
      "assumptions": [mod2]},
     {"group": "M12", "quotients": ["M12", "M12.2"], "characteristic": 2, "dimension": 10,
      "statement": {"kind": "CosetOrderDoubling", "class": "8A", "order": 8},
      "matrices": ["modules/m12-10-8a-1.mat"],
      "citation": "10-dimensional GF(2)-module of M12: f(t) = 1 + t + ... + t^7 is nonzero for t in class 8A",
      "assumptions": [mod2]}],
    gens="generators/m12.gens")
rec("U3(5)", [(2,4),(3,2),(5,3),(7,1)], 6, "S3", [6,7,8,10],
    [ext("U3(5).2",2,[7,8,12,20]), ext("U3(5).3",3,[21,24,30]), ext("U3(5).S3",6,[20,21,24,30])],
    [F73("inside A7"), F43("inside A7"), F94("inside A7")], gens="generators/u3-5.gens")
rec("A9", [(2,6),(3,4),(5,1),(7,1)], 2, "2", [7,9,10,12,15], [ext("A9.2",2,[8,9,12,14,15,20])],
    [F73("inside A7")], gens="generators/a9.gens")
rec("M22", [(2,7),(3,2),(5,1),(7,1),(11,1)], 2, "2", [5,6,7,8,11], [ext("M22.2",2,[8,10,11,12,14])],
    [F87("inside 2^3:L3(2)")],
    [{"group": "M22", "quotients": ["M22", "M22.2"], "characteristic": 2,
      "statement": {"kind": "ForcedDimensions", "dimensions": [10]},
      "context_absent": [22],
      "citation": "2-modular Brauer characters of M22: every other absolutely irreducible module yields an element of order 22",
      "assumptions": [mod2]},
     {"group": "M22", "quotients": ["M22", "M22.2"], "characteristic": 2, "dimension": 10,
      "statement": {"kind": "CosetOrderDoubling", "class": "8A", "order": 8},
      "matrices": ["modules/m22-10-8a-1.mat", "modules/m22-10-8a-2.mat"],
      "citation": "both 10-dimensional GF(2)-modules of M22: f(t) = 1 + t + ... + t^7 is nonzero for t in class 8A",
      "assumptions": [mod2]}],
    gens="generators/m22.gens")
rec("J2", [(2,7),(3,3),(5,2),(7,1)], 2, "2", [7,8,10,12,15], [ext("J2.2",2,[10,14,15,24])],
    [F73("inside U3(3)"), F43("inside A4 x A5"), fw(7, 6, "Frobenius subgroup 7:6 (normaliser of a Sylow 7-subgroup, inside L3(2):2)")],
    [{"group": "J2", "quotients": ["J2"], "characteristic": 2,
      "statement": {"kind": "FixedPointFreeClass", "class": "7A", "order": 7, "absent_order": 14},
      "context_absent": [30],
      "citation": "2-modular Brauer characters of J2: with no element of order 30, an element of order 7 acts fixed-point-freely on N",
      "assumptions": [mod2]},
     {"group": "J2", "quotients": ["J2.2"], "characteristic": 2,
      "statement": {"kind": "ForcedDimensions", "dimensions": [12]},
      "context_absent": [30],
      "citation": "2-modular Brauer characters of J2.2: every other absolutely irreducible module yields an element of order 30",
      "assumptions": [mod2]},
     {"group": "J2", "quotients": ["J2.2"], "characteristic": 2, "dimension": 12,
      "statement": {"kind": "CosetOrderDoubling", "class": "10A", "order": 10},
      "matrices": ["modules/j2.2-12-10a-1.mat"],
      "citation": "12-dimensional GF(2)-module of J2.2: f(t) = 1 + t + ... + t^9 is nonzero for t in class 10A",
      "assumptions": [mod2]}],
    gens="generators/j2.gens")
rec("S6(2)", [(2,9),(3,4),(5,1),(7,1)], 1, "1", [7,8,9,10,12,15], [],
    [F73("inside S8")], gens="generators/s6-2.gens")
rec("A10", [(2,7),(3,4),(5,2),(7,1)], 2, "2", [8,9,10,12,15,21], [ext("A10.2",2,[8,9,12,14,20,21,30])],
    [F73("inside A7")])
rec("U4(3)", [(2,7),(3,6),(5,1),(7,1)], 8, "D8", [5,7,8,9,12],
    [ext("U4(3).2_1",2,[8,9,10,12,14]), ext("U4(3).2_2",2,[7,8,10,12,18]), ext("U4(3).2_3",2,[7,9,10,24]),
     ext("U4(3).4",4,[9,20,24,28]), ext("U4(3).(2^2)_{122}",4,[8,10,12,14,18]),
     ext("U4(3).(2^2)_{133}",4,[9,10,14,24]), ext("U4(3).D8",8,[18,20,24,28])],
    [F73("inside A7")])
rec("U5(2)", [(2,10),(3,5),(5,1),(11,1)], 2, "2", [8,11,12,15,18], [ext("U5(2).2",2,[10,11,15,16,18,24])], [])
rec("A11", [(2,7),(3,4),(5,2),(7,1),(11,1)], 2, "2", [8,9,11,12,14,15,20,21],
    [ext("A11.2",2,[11,18,20,21,24,28,30])], [F73("inside A7")])
rec("HS", [(2,9),(3,2),(5,3),(7,1),(11,1)], 2, "2", [7,8,11,12,15,20], [ext("HS.2",2,[8,11,12,14,20,30])],
    [F87("inside M22")])
rec("S4(7)", [(2,8),(3,2),(5,2),(7,4)], 2, "2", [24,25,42,56], [ext("S4(7).2",2,[42,48,50,56])], [])
rec("O8+(2)", [(2,12),(3,5),(5,2),(7,1)], 6, "S3", [7,8,9,10,12,15],
    [ext("O8+(2).2",2,[14,18,20,24,30]), ext("O8+(2).3",3,[10,15,18,21,24]), ext("O8+(2).S3",6,[14,18,20,21,24,30])],
    [F73("inside A9")])
rec("A12", [(2,9),(3,5),(5,2),(7,1),(11,1)], 2, "2", [8,9,11,12,14,20,21,30,35],
    [ext("A12.2",2,[11,18,24,28,35,42,60])], [F73("inside A7")])
rec("McL", [(2,7),(3,6),(5,3),(7,1),(11,1)], 2, "2", [8,9,11,12,14,30], [ext("McL.2",2,[9,14,20,22,24,30])],
    [F87("inside M22")],
    [{"group": "McL", "quotients": ["McL", "McL.2"], "characteristic": 2,
      "statement": {"kind": "ForcedOrderAmong", "orders": [16, 18]},
      "citation": "chief factor of characteristic 2: trivial McL-action gives an element of order 18 (central involution times an element of order 9); faithful action gives order 16 via the Frobenius subgroup 3^2:8",
      "assumptions": [mod2, "case split: McL acts on the chief factor either trivially or faithfully"]}])
rec("U6(2)", [(2,15),(3,6),(5,1),(7,1),(11,1)], 6, "S3", [7,8,10,11,12,15,18],
    [ext("U6(2).2",2,[11,14,16,18,24,30]), ext("U6(2).3",3,[21,24,30,33,36]), ext("U6(2).S3",6,[14,16,21,24,30,33,36])], [])
rec("He", [(2,10),(3,3),(5,2),(7,3),(17,1)], 2, "2", [8,10,12,15,17,21,28], [ext("He.2",2,[16,17,20,24,28,30,42])], [],
    [{"group": "He", "quotients": ["He", "He.2"], "characteristic": 2,
      "statement": {"kind": "ForcedAdjacency", "primes": [2, 17]},
      "citation": "2-modular Brauer characters of He: an element of order 17 centralises a nonzero vector of every absolutely irreducible module",
      "assumptions": [mod2]}])
rec("Suz", [(2,13),(3,7),(5,2),(7,1),(11,1),(13,1)], 2, "2", [11,13,14,15,18,20,21,24], [ext("Suz.2",2,[13,16,18,21,22,24,28,30,40])], [],
    [{"group": "Suz", "quotients": ["Suz", "Suz.2"], "characteristic": 2,
      "statement": {"kind": "ForcedAdjacency", "primes": [2, 13]},
      "citation": "2-modular Brauer characters of Suz: an element of order 13 centralises a nonzero vector of every absolutely irreducible module",
      "assumptions": [mod2]}])
rec("ON", [(2,9),(3,4),(5,1),(7,3),(11,1),(19,1),(31,1)], 2, "2", [11,12,15,16,19,20,28,31], [ext("ON.2",2,[16,20,22,24,30,31,38,56])], [],
    [{"group": "ON", "quotients": ["ON", "ON.2"], "characteristic": 2,
      "statement": {"kind": "ForcedAdjacency", "primes": [2, 31]},
      "citation": "2-modular Brauer characters of ON: an element of order 31 centralises a nonzero vector of every absolutely irreducible module",
      "assumptions": [mod2]}])

def tgt(name, socle, mu, gens=None, red=False):
    t = {"name": name, "socle": socle, "group": socle + ".2", "mu": mu,
         "citation": f"mu(Aut(S)): {CTBL}"}
    if gens: t["generators"] = gens
    if red:
        t["imported_reduction"] = {"quotient": socle + ".2", "prime": 2, "axiom": "aut-sporadic-2-reduction"}
    return t

T = [tgt("aut-m12", "M12", [8,10,11,12], "generators/aut-m12.gens", True),
     tgt("aut-m22", "M22", [8,10,11,12,14], "generators/aut-m22.gens", True),
     tgt("aut-j2", "J2", [10,14,15,24], "generators/aut-j2.gens"),
     tgt("aut-he", "He", [16,17,20,24,28,30,42], "generators/aut-he.gens", True),
     tgt("aut-mcl", "McL", [9,14,20,22,24,30], "generators/aut-mcl.gens"),
     tgt("aut-suz", "Suz", [13,16,18,21,22,24,28,30,40], "generators/aut-suz.gens", True),
     tgt("aut-on", "ON", [16,20,22,24,30,31,38,56], None, True)]

A = [
 {"id": "burnside-paqb", "statement": "a group of order p^a q^b is soluble, so no non-abelian simple group has at most two prime divisors",
  "citation": "W. Burnside (1904)"},
 {"id": "thompson-fpf", "statement": "a finite group admitting a fixed-point-free automorphism of prime order is nilpotent",
  "citation": "J. G. Thompson (1959)"},
 {"id": "soluble-independence", "statement": "a soluble group has no three pairwise nonadjacent primes in its prime graph",
  "citation": "standard: the prime graph of a soluble group has no three pairwise nonadjacent vertices"},
 {"id": "frobenius-normal", "statement": "if G/N is Frobenius with kernel F and cyclic complement C, (|F|,|N|) = 1 and F does not lie in N C_G(N)/N, then p|C| is an element order of G for some prime p dividing |N|",
  "citation": "imported lemma on Frobenius quotients over a normal subgroup"},
 {"id": "aut-direct-power", "statement": "Aut(P^t) = Aut(P) wr S_t for a non-abelian simple P, so |Aut(P^t)| = |Aut(P)|^t t!",
  "citation": "standard: Aut(P^t) is the wreath product Aut(P) wr S_t"},
 {"id": "out-s11", "statement": "every simple group with all prime divisors at most 11 has {2,3} in its prime set and Out(S) a {2,3}-group",
  "citation": "classification of simple groups with prime divisors at most 11; " + ATLAS},
 {"id": "higman-l2-2m", "statement": "if L2(2^m) acts on a 2-group N with an element of order 3 acting fixed-point-freely, then N is elementary abelian",
  "citation": "G. Higman, Odd characterizations of finite simple groups (1968), Theorem 8.2"},
 {"id": "aut-sporadic-2-reduction", "statement": "a group isospectral with Aut(S), S in {M12, M22, He, Suz, ON}, has a normal 2-subgroup N with G/N isomorphic to Aut(S)",
  "citation": "imported reduction theorem for groups isospectral with automorphism groups of sporadic groups"},
]

json.dump({"simple_groups": R, "targets": T, "axioms": A}, open(os.path.join(os.path.dirname(os.path.abspath(__file__)), "..", "data", "catalog.json"), "w"), indent=1, ensure_ascii=False)
print(len(R))
