//! Exhaustive checks of the quantifier laws against brute-force oracles
//! working on plain bitmasks.

use kh_tripos::heyting::ClopenAlgebra;
use kh_tripos::topology::product_all;
use kh_tripos::tripos::{
    beck_chevalley_square, check_adjoint_chain, check_beck_chevalley, check_forall_fibers,
    check_functoriality, check_hom, exists_along, forall_along, ClopenQuantifiers,
};
use kh_tripos::{ContMap, FinSpace, Predicate, Space};

fn discrete(name: &str, n: usize) -> Space {
    FinSpace::discrete(name, (0..n).map(|i| format!("{}{i}", name.to_lowercase())).collect())
        .unwrap()
}

fn mask(p: &Predicate) -> u64 {
    p.extent().iter().fold(0, |m, i| m | 1 << i)
}

// Oracle: ∃_f m = {y | some x with f x = y is in m}.
fn oracle_exists(table: &[usize], m: u64) -> u64 {
    table
        .iter()
        .enumerate()
        .filter(|(x, _)| m >> x & 1 == 1)
        .fold(0, |acc, (_, &y)| acc | 1 << y)
}

// Oracle: ∀_f m = {y | every x with f x = y is in m}.
fn oracle_forall(table: &[usize], m: u64, cod: usize) -> u64 {
    (0..cod)
        .filter(|&y| (0..table.len()).all(|x| table[x] != y || m >> x & 1 == 1))
        .fold(0, |acc, y| acc | 1 << y)
}

fn oracle_pullback(table: &[usize], m: u64) -> u64 {
    (0..table.len())
        .filter(|&x| m >> table[x] & 1 == 1)
        .fold(0, |acc, x| acc | 1 << x)
}

#[test]
fn quantifiers_match_oracle_on_all_small_maps() {
    for n in 0..=3 {
        for k in 0..=3 {
            let (x, y) = (discrete("X", n), discrete("Y", k));
            for f in ContMap::all_maps(&x, &y) {
                for phi in ClopenAlgebra::of(&x).unwrap().predicates() {
                    let m = mask(&phi);
                    assert_eq!(mask(&exists_along(&f, &phi).unwrap()), oracle_exists(f.table(), m));
                    assert_eq!(
                        mask(&forall_along(&f, &phi).unwrap()),
                        oracle_forall(f.table(), m, k)
                    );
                }
            }
        }
    }
}

#[test]
fn adjoint_chain_exhaustive() {
    let mut maps = 0;
    for n in 0..=3 {
        for k in 0..=3 {
            let (x, y) = (discrete("X", n), discrete("Y", k));
            for f in ContMap::all_maps(&x, &y) {
                maps += 1;
                let r = check_adjoint_chain(&f, &ClopenQuantifiers).unwrap();
                assert!(r.passed(), "{r:?}");
                assert_eq!(r.cases, 1 << (n + k));
                assert!(check_forall_fibers(&f, &ClopenQuantifiers).unwrap().passed());
                assert!(check_hom(&f).unwrap().passed());
                // Same law phrased on masks.
                for a in 0..1u64 << n {
                    for b in 0..1u64 << k {
                        let pb = oracle_pullback(f.table(), b);
                        assert_eq!(oracle_exists(f.table(), a) & !b == 0, a & !pb == 0);
                        assert_eq!(pb & !a == 0, b & !oracle_forall(f.table(), a, k) == 0);
                    }
                }
            }
        }
    }
    // Σ_{n,k≤3} k^n, with 0^0 = 1.
    let expected: usize = (0..=3u32)
        .flat_map(|n| (0..=3usize).map(move |k| k.pow(n)))
        .sum();
    assert_eq!(maps, expected);
}

#[test]
fn functoriality_on_composable_pairs() {
    for n in 0..=2 {
        for k in 1..=2 {
            for l in 1..=2 {
                let (x, y, z) = (discrete("X", n), discrete("Y", k), discrete("Z", l));
                for f in ContMap::all_maps(&x, &y) {
                    for g in ContMap::all_maps(&y, &z) {
                        assert!(check_functoriality(&f, &g).unwrap().passed());
                    }
                }
            }
        }
    }
}

#[test]
fn beck_chevalley_exhaustive() {
    for nx in 0..=3 {
        for ng in 0..=3 {
            for nd in 0..=3 {
                let x = discrete("X", nx);
                let (g, d) = (discrete("G", ng), discrete("D", nd));
                for k in ContMap::all_maps(&g, &d) {
                    let sq = beck_chevalley_square(&x, &k).unwrap();
                    let r = check_beck_chevalley(&sq, &ClopenQuantifiers).unwrap();
                    assert!(r.passed(), "{r:?}");
                    assert_eq!(r.cases, 1 << (nx * nd));
                }
            }
        }
    }
}

#[test]
fn beck_chevalley_against_oracle() {
    // ∃_{π_Γ}(id×k)*φ holds at γ iff some x has (x, k γ) ∈ φ.
    let x = discrete("X", 2);
    let g = discrete("G", 3);
    let d = discrete("D", 2);
    for k in ContMap::all_maps(&g, &d) {
        let xd = product_all(&[x.clone(), d.clone()], 64).unwrap();
        let sq = beck_chevalley_square(&x, &k).unwrap();
        for phi in ClopenAlgebra::of(&xd.space).unwrap().predicates() {
            let pulled = kh_tripos::tripos::reindex(&sq.square.left, &phi).unwrap();
            let lhs = exists_along(&sq.square.top, &pulled).unwrap();
            for gamma in 0..3 {
                let expected = (0..2).any(|xi| phi.contains(xd.index(&[xi, k.apply(gamma)])));
                assert_eq!(lhs.contains(gamma), expected);
            }
        }
    }
}
