use super::*;
use crate::combinat::{binomial, catalan};
use crate::exactalg::{MonomialOrder, Variable};
use crate::groebner::{buchberger, is_groebner, s_polynomial};
use crate::lattice::{canonical_extension, pi, PairOrder};

fn poly(s: &str) -> Polynomial {
    s.parse().unwrap()
}

#[test]
fn quadric_shape_and_errors() {
    assert_eq!(quadric(1, 2, 3, 4).unwrap(), poly("p[1,4]*p[2,3] - p[1,3]*p[2,4] + p[1,2]*p[3,4]"));
    assert!(quadric(1, 3, 2, 4).is_err());
    assert!(cubic5(1, 2, 3, 5, 4).is_err());
    assert_eq!(quadrics(6).len(), 15);
}

#[test]
fn parametrisation_kills_relations() {
    assert_eq!(plucker_image(&poly("p[1,2]")).unwrap(), poly("x[1]*y[2] - x[2]*y[1]"));
    assert!(!plucker_map_oracle(&poly("p[1,2]")).unwrap());
    for n in 4..=7 {
        for f in appendix_basis(n) {
            assert!(plucker_map_oracle(&f).unwrap(), "{f}");
        }
    }
    assert!(plucker_map_oracle(&cubic6(1, 2, 3, 4, 5, 6).unwrap()).unwrap());
    assert!(plucker_map_oracle(&poly("x[1]")).is_err());
}

#[test]
fn cubic_sign_relations() {
    let c = cubic5_signed(1, 2, 3, 4, 5).unwrap();
    assert_eq!(cubic5_signed(2, 1, 3, 4, 5).unwrap(), -c.clone());
    assert_eq!(cubic5_signed(1, 2, 3, 5, 4).unwrap(), -c);
    let c6 = cubic6_signed(1, 2, 3, 4, 5, 6).unwrap();
    // Swapping i<->j and k<->l only changes the sign once p_ab = -p_ba is used.
    assert_eq!(cubic6_signed(2, 1, 4, 3, 5, 6).unwrap(), -c6);
}

#[test]
fn s_pairs_give_cubics() {
    let ord = appendix_order(6);
    let q = |i, j, k, l| quadric(i, j, k, l).unwrap();
    assert_eq!(s_polynomial(&q(1, 3, 4, 5), &q(2, 3, 4, 5), &ord).unwrap(), cubic5(1, 2, 3, 4, 5).unwrap());
    assert_eq!(s_polynomial(&q(1, 4, 5, 6), &q(2, 3, 5, 6), &ord).unwrap(), cubic6(1, 2, 3, 4, 5, 6).unwrap());
}

#[test]
fn leading_terms() {
    let app = appendix_order(5);
    let (m, c) = app.leading_term(&quadric(1, 2, 3, 4).unwrap()).unwrap();
    assert_eq!(m, Monomial::product([p(1, 2), p(3, 4)]));
    assert_eq!(c, Rational::from_integer(1.into()));
    let (m, _) = app.leading_term(&cubic5(1, 2, 3, 4, 5).unwrap()).unwrap();
    assert_eq!(m, Monomial::product([p(1, 3), p(2, 4), p(3, 5)]));
    let rev = revlex_order_from_l(&canonical_extension(4, PairOrder::L)).unwrap();
    assert_eq!(
        rev.compare(&Monomial::product([p(1, 4), p(2, 3)]), &Monomial::product([p(1, 3), p(2, 4)])).unwrap(),
        std::cmp::Ordering::Greater
    );
}

#[test]
fn normal_form_examples() {
    let rev = revlex_order_from_l(&canonical_extension(4, PairOrder::L)).unwrap();
    let q = quadric(1, 2, 3, 4).unwrap();
    assert_eq!(
        crate::groebner::normal_form(&poly("p[1,4]*p[2,3]"), std::slice::from_ref(&q), &rev).unwrap(),
        poly("p[1,3]*p[2,4] - p[1,2]*p[3,4]")
    );
    let gb = buchberger(&plucker_ideal(4), &appendix_order(4)).unwrap();
    let r = gb.reduce(&poly("p[1,2]*p[3,4] + p[1,3]*p[2,4]")).unwrap();
    assert_eq!(r, poly("2*p[1,3]*p[2,4] - p[1,4]*p[2,3]"));
    assert!(plucker_map_oracle(&(poly("p[1,2]*p[3,4] + p[1,3]*p[2,4]") - r)).unwrap());
}

#[test]
fn quadrics_are_groebner_for_l_and_pi_orders() {
    for n in 4..=5 {
        for ext in seeded_extensions(n, PairOrder::L, 2, 11) {
            assert!(is_groebner(&quadrics(n), &revlex_order_from_l(&ext).unwrap()).unwrap());
        }
        for ext in seeded_extensions(n, PairOrder::Pi, 2, 11) {
            assert!(is_groebner(&quadrics(n), &lex_order_from_pi(&ext).unwrap()).unwrap());
        }
    }
    assert!(!is_groebner(&quadrics(5), &appendix_order(5)).unwrap());
    assert!(revlex_order_from_l(&canonical_extension(4, PairOrder::Pi)).is_err());
}

#[test]
fn appendix_basis_small() {
    for n in 4..=6 {
        let gb = buchberger(&plucker_ideal(n), &appendix_order(n)).unwrap();
        let ord = appendix_order(n);
        let listed = appendix_basis(n);
        assert!(is_groebner(&listed, &ord).unwrap());
        // The listed six-index cubics carry tail terms divisible by quadric
        // leading terms; inter-reducing the list gives the reduced basis.
        assert_eq!(gb.elements(), &crate::groebner::interreduce(&listed, &ord).unwrap()[..]);
        let mut lms = crate::groebner::leading_monomial_set(&listed, &ord).unwrap();
        for m in gb.leading_monomials() {
            assert!(lms.remove(&m));
        }
        assert!(lms.is_empty());
        if n >= 6 {
            let c6 = cubic6(1, 2, 3, 4, 5, 6).unwrap();
            assert!(!gb.elements().contains(&c6));
            assert!(!crate::groebner::is_reduced(&listed, &ord).unwrap());
        }
        let c = binomial(n as u64, 4) + binomial(n as u64, 5) + binomial(n as u64, 6);
        assert_eq!(gb.len() as u64, c);
        // idempotent
        let again = buchberger(&crate::groebner::Ideal::spanning(gb.elements().to_vec(), []).unwrap(), &ord).unwrap();
        assert_eq!(again.elements(), gb.elements());
    }
}

#[test]
fn straightening() {
    let s = straighten(&poly("p[1,4]*p[2,3]")).unwrap();
    let as_poly: Polynomial = s.iter().map(|(c, m)| Polynomial::monomial(m.to_monomial(), c.clone())).fold(Polynomial::zero(), |a, b| a + b);
    assert_eq!(as_poly, poly("p[1,3]*p[2,4] - p[1,2]*p[3,4]"));
    let std = poly("p[1,2]*p[1,3]*p[2,4]");
    assert_eq!(straighten(&std).unwrap().len(), 1);
    let f = poly("p[1,5]*p[2,4]*p[2,3]");
    let (rewritten, steps) = straighten_by_rewriting(&f).unwrap();
    assert!(!steps.is_empty());
    assert!(steps.iter().all(|s| s.dominated()));
    let nf: Polynomial = straighten(&f)
        .unwrap()
        .into_iter()
        .map(|(c, m)| Polynomial::monomial(m.to_monomial(), c))
        .fold(Polynomial::zero(), |a, b| a + b);
    assert_eq!(rewritten, nf);
    assert!(plucker_map_oracle(&(f - nf)).unwrap());
    assert!(asl_dominance_holds(5).unwrap().is_none());
}

#[test]
fn standard_monomial_counts() {
    assert_eq!(standard_monomials(4, 0).len(), 1);
    // 21 degree-two monomials on six variables, one of them p14*p23 non-standard.
    assert_eq!(standard_monomials(4, 2).len(), 20);
    assert_eq!(standard_monomials(5, 2).len(), 55 - 5);
    for (n, d) in [(4, 0), (4, 2), (5, 2), (4, 3)] {
        let check = standard_monomial_basis_check(n, d).unwrap();
        assert!(check.passed, "{check:?}");
    }
    assert!(standard_monomial_basis_check(7, 2).is_err());
    assert!(is_standard(&Monomial::product([p(1, 2), p(3, 4)])).unwrap());
    assert!(!is_standard(&Monomial::product([p(1, 4), p(2, 3)])).unwrap());
}

#[test]
fn elimination_examples() {
    let l = crate::lattice::Sublattice::from_intervals(5, &[(1, 3), (2, 5)]).unwrap();
    assert!(l.is_perfect());
    let expected = quadric_ideal_of(&l).unwrap();
    assert_eq!(expected.generators(), &[quadric(2, 3, 4, 5).unwrap()]);
    assert!(elimination_vs_quadrics(&l).unwrap());
    assert!(elimination_vs_quadrics(&crate::lattice::Sublattice::full(5)).unwrap());
    let bad = crate::lattice::Sublattice::from_pairs(4, &[(1, 4), (2, 3)]).unwrap();
    assert!(elimination_vs_quadrics(&bad).is_err());
}

#[test]
fn elimination_order_graphs() {
    use crate::graphs::Graph;
    let full = Graph::complete(5);
    assert!(elim_order_graph_corollary(&full).unwrap());
    let mut g5 = Graph::complete(5).edges().clone();
    g5.remove(&pi(1, 2));
    assert!(elim_order_graph_corollary(&Graph::new(5, g5).unwrap()).unwrap());
    let mut g6 = Graph::complete(6).edges().clone();
    for e in [pi(1, 2), pi(1, 3), pi(1, 4)] {
        g6.remove(&e);
    }
    assert!(elim_order_graph_corollary(&Graph::new(6, g6).unwrap()).unwrap());
    let mut odd = Graph::complete(5).edges().clone();
    odd.remove(&pi(2, 3));
    assert!(elim_order_graph_corollary(&Graph::new(5, odd).unwrap()).is_err());
}

#[test]
fn stanley_reisner() {
    let x = |i| Variable::X(i);
    let single = SquarefreeMonomialIdeal::new(vec![x(1), x(2), x(3)], [Monomial::var(x(1))]).unwrap();
    let s = stanley_reisner_analysis(&single);
    assert_eq!((s.dimension, s.degree, s.equidimensional), (2, 1, true));
    assert!(SquarefreeMonomialIdeal::new(vec![x(1)], [Monomial::from_powers([(x(1), 2)])]).is_err());
    for n in 4..=6 {
        let m = m_ideal(n);
        let s = stanley_reisner_analysis(&m);
        assert_eq!(s.dimension, 2 * n - 3);
        assert_eq!(s.degree as u64, catalan(n as u64 - 2));
        assert!(s.equidimensional);
        assert!(m.stanley_reisner_complex().facets_pairwise_incomparable());
    }
}

#[test]
fn orders_from_sublattices() {
    let l = crate::lattice::Sublattice::from_intervals(5, &[(1, 3), (2, 5)]).unwrap();
    for seed in [None, Some(1), Some(2)] {
        let ord = elimination_order(&l, seed).unwrap();
        assert_eq!(ord.kept(), l.variables());
    }
    let _ = MonomialOrder::lex(vec![p(1, 2)]).unwrap();
}
