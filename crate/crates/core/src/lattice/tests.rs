use super::*;
use crate::combinat::catalan;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn fig3() -> Sublattice {
    Sublattice::from_intervals(7, &[(1, 5), (2, 6), (4, 7)]).unwrap()
}

fn pairs(list: &[u32]) -> Vec<PairIndex> {
    list.iter().map(|&x| pi((x / 10) as usize, (x % 10) as usize)).collect()
}

#[test]
fn orders_meet_join() {
    assert!(leq_l(pi(1, 2), pi(1, 3)));
    assert!(!leq_l(pi(1, 4), pi(2, 3)) && !leq_l(pi(2, 3), pi(1, 4)));
    assert!(leq_pi(pi(1, 5), pi(2, 3)));
    assert_eq!(meet(pi(1, 4), pi(2, 3)), pi(1, 3));
    assert_eq!(join(pi(1, 4), pi(2, 3)), pi(2, 4));
    assert_eq!(meet(pi(2, 5), pi(2, 5)), pi(2, 5));
    assert!(PairIndex::new(3, 3).is_err());
}

#[test]
fn distributive_law() {
    for n in 2..=6 {
        let all = all_pairs(n);
        for &a in &all {
            for &b in &all {
                for &c in &all {
                    assert_eq!(meet(a, join(b, c)), join(meet(a, b), meet(a, c)));
                    assert_eq!(join(a, meet(b, c)), meet(join(a, b), join(a, c)));
                }
            }
        }
    }
}

#[test]
fn sublattice_and_ideal_checks() {
    let s = Sublattice::from_pairs(4, &[(1, 4), (2, 3)]).unwrap();
    assert!(!s.is_sublattice());
    assert!(Sublattice::full(6).complement_is_poset_ideal());
    let fig4 = Sublattice::new(6, pairs(&[14, 23, 24, 25, 26, 34, 36, 45])).unwrap();
    assert!(!fig4.complement_is_poset_ideal());
}

#[test]
fn figure_three_sublattice() {
    let s = fig3();
    assert_eq!(
        s.members().iter().copied().collect::<Vec<_>>(),
        pairs(&[12, 13, 14, 15, 23, 24, 25, 26, 34, 35, 36, 45, 46, 47, 56, 57, 67])
    );
    assert!(s.is_compatible());
    assert!(s.is_perfect());
    let ji = s.join_irreducibles().unwrap();
    assert_eq!(ji.elements(), Subposet::new(pairs(&[13, 14, 15, 26, 47, 23, 34, 45, 56, 67])).elements());
    // Clique overlaps 4 and 3: the first exceeds three, so not pure.
    assert!(!ji.is_pure());
    let (a, b) = ji.impurity_witness().unwrap();
    assert_ne!(a.length(), b.length());
    assert_eq!(
        s.fundamental_chain().unwrap().elements(),
        &pairs(&[12, 13, 14, 15, 25, 26, 36, 46, 47, 57, 67])[..]
    );
    assert_eq!(s.generating_intervals(), vec![(1, 5), (2, 6), (4, 7)]);
}

#[test]
fn small_lattices() {
    assert_eq!(Sublattice::full(5).rank().unwrap(), 6);
    let single = Subposet::new([pi(2, 4)]);
    assert_eq!(single.rank().unwrap(), 0);
    assert!(single.is_pure());
    assert_eq!(Subposet::new([]).rank(), Err(Error::EmptyPoset));

    let l4 = Sublattice::full(4);
    assert_eq!(l4.join_irreducibles().unwrap().elements(), &pairs(&[13, 14, 23, 34])[..]);
    assert_eq!(l4.fundamental_chain().unwrap().elements(), &pairs(&[12, 13, 14, 24, 34])[..]);

    let chain = Sublattice::new(5, pairs(&[12, 13, 23, 24, 34])).unwrap();
    assert_eq!(chain.join_irreducibles().unwrap().elements(), &pairs(&[13, 23, 24, 34])[..]);
    assert!(Sublattice::from_pairs(4, &[(1, 4), (2, 3)]).unwrap().join_irreducibles().is_err());
}

#[test]
fn full_lattice_fundamental_chain() {
    for n in 3..=8 {
        let c = Sublattice::full(n).fundamental_chain().unwrap();
        assert_eq!(c.length(), 2 * n - 4);
        let expected: Vec<PairIndex> = (2..=n)
            .map(|j| pi(1, j))
            .chain((2..n).map(|i| pi(i, n)))
            .collect();
        assert_eq!(c.elements(), &expected[..]);
    }
}

#[test]
fn perfect_counts_are_catalan() {
    for n in 3..=9 {
        let perfect = enumerate_perfect_compatible(n).unwrap();
        assert_eq!(perfect.len() as u64, catalan(n as u64 - 2), "n = {n}");
        for s in &perfect {
            let c = s.fundamental_chain().unwrap();
            assert_eq!(c.length(), 2 * n - 4);
        }
    }
    assert!(enumerate_perfect_compatible(10).is_err());
    assert!(enumerate_perfect_compatible(2).is_err());
}

#[test]
fn enumeration_matches_brute_force() {
    for n in 3..=5 {
        for clause in [RankClause::AtLeastN, RankClause::ExactlyN, RankClause::Omitted] {
            assert_eq!(enumerate_compatible_with(n, clause).unwrap(), brute_force_compatible(n, clause).unwrap());
        }
        assert_eq!(enumerate_perfect_compatible(n).unwrap(), brute_force_perfect(n).unwrap());
    }
}

#[test]
fn every_pi_filter_is_a_sublattice() {
    for n in 3..=8 {
        for s in enumerate_pi_filters(n).unwrap() {
            assert!(s.is_sublattice());
            assert!(s.complement_is_poset_ideal());
        }
    }
}

#[test]
fn perfection_is_maximal_rank() {
    for n in 3..=6 {
        for s in enumerate_pi_filters(n).unwrap() {
            assert_eq!(s.is_perfect(), s.rank().unwrap() == 2 * n - 4, "{s:?}");
        }
    }
}

#[test]
fn linear_extensions() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for n in 2..=7 {
        for order in [PairOrder::L, PairOrder::Pi] {
            assert!(is_linear_extension(&canonical_extension(n, order), order));
            for _ in 0..5 {
                let e = random_extension(n, order, &mut rng);
                assert_eq!(e.len(), n * (n - 1) / 2);
                assert!(is_linear_extension(&e, order));
            }
        }
    }
    assert!(!is_linear_extension(&[pi(1, 3), pi(1, 2)], PairOrder::L));
}
