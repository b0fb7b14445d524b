//! Bodies of the named checks.

use std::collections::BTreeSet;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{CheckId, Outcome, QuadricOrder, VerifyOptions};
use crate::arcs::{enumerate_maximal, enumerate_maximal_naive, full_binary_shapes, FullBinaryTree};
use crate::combinat::{binomial, catalan};
use crate::error::Result;
use crate::exactalg::{Monomial, MonomialOrder, Polynomial};
use crate::graphs::{
    admissible_systems, condition_star, gorenstein_counts, graph_of, interval_system, is_chordal,
};
use crate::groebner::{buchberger, eliminate, groebner_witness, interreduce, leading_monomial_set};
use crate::lattice::{
    all_pairs, enumerate_compatible_with, enumerate_pi_filters, PairIndex, PairOrder,
    RankClause, Sublattice,
};
use crate::plucker::{
    appendix_basis, appendix_order, asl_dominance_holds, cubics5, cubics6, elimination_order,
    elimination_vs_quadrics, lex_order_from_pi, m_ideal, plucker_ideal, plucker_map_oracle, quadrics,
    revlex_order_from_l, seeded_extensions, stanley_reisner_analysis, standard_monomial_basis_check, straighten,
    straighten_by_rewriting,
};

pub(super) fn dispatch(check: CheckId, n: usize, opts: &VerifyOptions) -> Result<Outcome> {
    match check {
        CheckId::Oracle => oracle(n),
        CheckId::GbQuadrics => gb_quadrics(n, opts),
        CheckId::GbAppendix => gb_appendix(n),
        CheckId::Elimination => elimination(n, opts),
        CheckId::Sydney => sydney(n, opts),
        CheckId::Gorenstein => gorenstein(n),
        CheckId::AslBasis => asl_basis(n),
        CheckId::StanleyReisner => stanley_reisner(n),
        CheckId::ArcsBijection => arcs_bijection(n),
    }
}

fn first_non_member<'a>(polys: impl IntoIterator<Item = &'a Polynomial>) -> Result<(usize, Option<String>)> {
    let mut count = 0;
    for f in polys {
        count += 1;
        if !plucker_map_oracle(f)? {
            return Ok((count, Some(f.to_string())));
        }
    }
    Ok((count, None))
}

/// Every constructed generator vanishes under `p_ij -> x_i y_j - x_j y_i`.
fn oracle(n: usize) -> Result<Outcome> {
    let mut pool: Vec<(&str, Vec<Polynomial>)> = vec![
        ("quadric", quadrics(n)),
        ("cubic5", cubics5(n)),
        ("cubic6", cubics6(n)),
    ];
    pool.push(("appendix-gb", buchberger(&plucker_ideal(n), &appendix_order(n))?.into_elements()));
    let rev = revlex_order_from_l(&crate::lattice::canonical_extension(n, PairOrder::L))?;
    pool.push(("revlex-gb", buchberger(&plucker_ideal(n), &rev)?.into_elements()));
    let mut elim = Vec::new();
    for l in enumerate_compatible_with(n, RankClause::AtLeastN)? {
        let ord = elimination_order(&l, None)?;
        elim.extend(eliminate(&plucker_ideal(n), &l.variables(), &ord)?.generators().iter().cloned());
    }
    pool.push(("elimination", elim));
    let mut total = 0;
    for (kind, polys) in &pool {
        let (count, bad) = first_non_member(polys)?;
        total += count;
        if let Some(f) = bad {
            return Ok(Outcome::fail(format!("{kind} generator not in the Plücker ideal: {f}")));
        }
    }
    let sizes: Vec<String> = pool.iter().map(|(k, p)| format!("{k}:{}", p.len())).collect();
    Ok(Outcome::pass(format!("{total} polynomials vanish ({})", sizes.join(" "))))
}

fn leading_set(g: &[Polynomial], ord: &MonomialOrder) -> Result<BTreeSet<Monomial>> {
    Ok(leading_monomial_set(g, ord)?.into_iter().collect())
}

/// The quadrics form a Gröbner basis for revlex from `L_n` or lex from
/// `Π_n`, for the canonical and several seeded linear extensions.
fn gb_quadrics(n: usize, opts: &VerifyOptions) -> Result<Outcome> {
    let qs = quadrics(n);
    let (poset, name) = match opts.order {
        QuadricOrder::Revlex => (PairOrder::L, "revlex"),
        QuadricOrder::Lex => (PairOrder::Pi, "lex"),
    };
    let exts = seeded_extensions(n, poset, opts.extensions, opts.seed);
    for (k, ext) in exts.iter().enumerate() {
        let ord = match opts.order {
            QuadricOrder::Revlex => revlex_order_from_l(ext)?,
            QuadricOrder::Lex => lex_order_from_pi(ext)?,
        };
        if let Some((i, j, r)) = groebner_witness(&qs, &ord)? {
            return Ok(Outcome::fail(format!(
                "extension #{k}: S({}, {}) has remainder {r}",
                qs[i], qs[j]
            ))
            .with_param("order", name));
        }
    }
    let mut summary = format!("{} quadrics certified under {} linear extensions", qs.len(), exts.len());
    if opts.order == QuadricOrder::Lex && n <= 6 {
        let rev = revlex_order_from_l(&crate::lattice::canonical_extension(n, PairOrder::L))?;
        let expected: BTreeSet<Monomial> = crate::plucker::tuples(n, 4)
            .into_iter()
            .map(|t| Monomial::product([PairIndex { i: t[0], j: t[3] }.variable(), PairIndex { i: t[1], j: t[2] }.variable()]))
            .collect();
        for ext in &exts {
            let lex = lex_order_from_pi(ext)?;
            if leading_set(&qs, &lex)? != expected {
                return Ok(Outcome::fail("lex initial terms differ from p_il*p_jk").with_param("order", name));
            }
        }
        if leading_set(&qs, &rev)? != expected {
            return Ok(Outcome::fail("revlex initial terms differ from p_il*p_jk").with_param("order", name));
        }
        summary.push_str("; initial terms p_il*p_jk coincide with revlex");
    }
    Ok(Outcome::pass(summary).with_param("order", name))
}

/// Buchberger from the quadrics under `p12 > p13 > ...` reproduces the
/// quadrics and the five- and six-index cubics.
fn gb_appendix(n: usize) -> Result<Outcome> {
    let ord = appendix_order(n);
    let gb = buchberger(&plucker_ideal(n), &ord)?;
    let listed = appendix_basis(n);
    let want = (binomial(n as u64, 4) + binomial(n as u64, 5) + binomial(n as u64, 6)) as usize;
    if gb.len() != want {
        return Ok(Outcome::fail(format!("reduced basis has {} elements, expected {want}", gb.len())));
    }
    if leading_set(gb.elements(), &ord)? != leading_set(&listed, &ord)? {
        return Ok(Outcome::fail("leading monomials differ from the listed basis"));
    }
    if let Some((i, j, r)) = groebner_witness(&listed, &ord)? {
        return Ok(Outcome::fail(format!("listed set is not a Gröbner basis: S({}, {}) -> {r}", listed[i], listed[j])));
    }
    if interreduce(&listed, &ord)? != gb.elements() {
        return Ok(Outcome::fail("inter-reduced listed set differs from the computed reduced basis"));
    }
    let q5 = binomial(n as u64, 4) as usize + binomial(n as u64, 5) as usize;
    if let Some(f) = listed[..q5].iter().find(|f| !gb.elements().contains(f)) {
        return Ok(Outcome::fail(format!("{f} is not verbatim in the reduced basis")));
    }
    let tails = listed[q5..].iter().filter(|f| !gb.elements().contains(f)).count();
    let mut notes = Vec::new();
    if tails > 0 {
        notes.push(format!(
            "{tails} listed six-index cubics have tail terms divisible by quadric leading terms; they match after inter-reduction"
        ));
    }
    Ok(Outcome::pass(format!(
        "{} = {} quadrics + {} + {} cubics",
        gb.len(),
        binomial(n as u64, 4),
        binomial(n as u64, 5),
        binomial(n as u64, 6)
    ))
    .with_notes(notes))
}

/// Elimination ideals of compatible sublattices are generated by the
/// quadrics `Q_ijkl` with `p_il` in the sublattice.
fn elimination(n: usize, opts: &VerifyOptions) -> Result<Outcome> {
    let cases = enumerate_compatible_with(n, opts.rank_clause)?;
    for l in &cases {
        if !elimination_vs_quadrics(l)? {
            return Ok(Outcome::fail(format!("elimination ideal differs for {}", intervals(l)))
                .with_param("rank-clause", format!("{:?}", opts.rank_clause)));
        }
    }
    let filters = enumerate_pi_filters(n)?;
    let by = |c: RankClause| filters.iter().filter(|s| s.is_compatible_with(c)).count();
    let (ge, eq, any) = (by(RankClause::AtLeastN), by(RankClause::ExactlyN), by(RankClause::Omitted));
    let mut notes = vec![format!(
        "sublattices with Π-ideal complement: {any}; rank >= n: {ge}; rank == n: {eq}"
    )];
    if ge != eq {
        notes.push(format!("{} cases distinguish rank >= n from rank == n", ge - eq));
    }
    let interval_not_compatible: Vec<&Sublattice> = filters
        .iter()
        .filter(|s| interval_system(&graph_of(s)).is_ok() && !s.is_compatible_with(opts.rank_clause))
        .collect();
    if let Some(s) = interval_not_compatible.first() {
        notes.push(format!(
            "{} interval graphs without isolated vertices are not compatible under this rank reading, e.g. {}",
            interval_not_compatible.len(),
            intervals(s)
        ));
    }
    Ok(Outcome::pass(format!("{} compatible sublattices checked", cases.len()))
        .with_param("rank-clause", format!("{:?}", opts.rank_clause))
        .with_notes(notes))
}

fn pair_list(ps: &[PairIndex]) -> String {
    let parts: Vec<String> = ps.iter().map(|p| p.to_string()).collect();
    format!("{{{}}}", parts.join(","))
}

fn intervals(s: &Sublattice) -> String {
    s.generating_intervals().iter().map(|(a, b)| format!("[{a},{b}]")).collect()
}

/// Outcome of comparing the two sides of the interval-graph lemma on a
/// family of edge sets.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SydneyTally {
    pub cases: usize,
    /// Complement ideal disagrees with interval recognition.
    pub lemma_failures: Vec<Vec<PairIndex>>,
    /// Condition (*) disagrees with interval recognition on a connected graph.
    pub star_failures: Vec<Vec<PairIndex>>,
    /// Same, on a disconnected graph (reported only).
    pub star_disconnected: usize,
    /// Interval graphs that are not chordal.
    pub chordal_failures: usize,
}

fn tally(s: &Sublattice, t: &mut SydneyTally) {
    let g = graph_of(s);
    if g.has_isolated_vertices() {
        return;
    }
    t.cases += 1;
    let interval = interval_system(&g).is_ok();
    if s.complement_is_poset_ideal() != interval {
        t.lemma_failures.push(s.members().iter().copied().collect());
    }
    if condition_star(&g) != interval {
        if g.is_connected() {
            t.star_failures.push(s.members().iter().copied().collect());
        } else {
            t.star_disconnected += 1;
        }
    }
    if interval && !is_chordal(&g) {
        t.chordal_failures += 1;
    }
}

/// Exhaustive for `n <= 5`; otherwise `samples` seeded edge sets without
/// isolated vertices, half uniform and half perturbed `Π_n`-filters.
pub fn sydney_sample(n: usize, samples: usize, seed: u64) -> Result<SydneyTally> {
    let mut t = SydneyTally::default();
    let pairs = all_pairs(n);
    if n <= 5 {
        for mask in 0u32..(1 << pairs.len()) {
            let s = Sublattice::new(n, pairs.iter().enumerate().filter(|(k, _)| mask >> k & 1 == 1).map(|(_, &p)| p))?;
            tally(&s, &mut t);
        }
        return Ok(t);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ (n as u64) << 32);
    let filters = enumerate_pi_filters(n)?;
    let mut k = 0u64;
    while t.cases < samples {
        k += 1;
        let members: BTreeSet<PairIndex> = if k.is_multiple_of(2) {
            pairs.iter().copied().filter(|_| rng.gen_bool(0.5)).collect()
        } else {
            let mut m = filters.choose(&mut rng).expect("nonempty").members().clone();
            for _ in 0..rng.gen_range(0..=2) {
                let p = *pairs.choose(&mut rng).expect("nonempty");
                if !m.remove(&p) {
                    m.insert(p);
                }
            }
            m
        };
        tally(&Sublattice::new(n, members)?, &mut t);
    }
    Ok(t)
}

fn sydney(n: usize, opts: &VerifyOptions) -> Result<Outcome> {
    let t = sydney_sample(n, opts.samples, opts.seed)?;
    let mode = if n <= 5 { "exhaustive" } else { "sampled" };
    let notes = vec![format!("condition (*) disagrees with interval recognition on {} disconnected graphs", t.star_disconnected)];
    let o = if let Some(s) = t.lemma_failures.first() {
        Outcome::fail(format!("complement ideal and interval recognition disagree on {}", pair_list(s)))
    } else if let Some(s) = t.star_failures.first() {
        Outcome::fail(format!("condition (*) and interval recognition disagree on connected {}", pair_list(s)))
    } else if t.chordal_failures > 0 {
        Outcome::fail(format!("{} interval graphs are not chordal", t.chordal_failures))
    } else {
        Outcome::pass(format!("{} edge sets without isolated vertices", t.cases))
    };
    Ok(o.with_param("mode", mode).with_notes(notes))
}

/// Overlap criteria against lattice-side perfection and purity of
/// join-irreducibles, and the three Gorenstein counts.
fn gorenstein(n: usize) -> Result<Outcome> {
    let systems = admissible_systems(n);
    let mut gp = 0u64;
    for s in &systems {
        let l = s.sublattice();
        let pure = l.join_irreducibles()?.is_pure();
        if s.gorenstein_criterion() != pure {
            return Ok(Outcome::fail(format!("{s}: overlaps {:?} but join-irreducibles pure = {pure}", s.overlaps())));
        }
        if s.perfect_criterion() != l.is_perfect() {
            return Ok(Outcome::fail(format!("{s}: perfect criterion disagrees with the lattice")));
        }
        if s.gorenstein_perfect_criterion() {
            gp += 1;
        }
    }
    let counts = gorenstein_counts(n)?;
    if !counts.agree || counts.recurrence != gp.to_string() {
        return Ok(Outcome::fail(format!("counts disagree: {counts:?}, systems with overlaps in 2..=3: {gp}")));
    }
    let brute = counts.brute_force.map_or("-".to_string(), |b| b.to_string());
    Ok(Outcome::pass(format!(
        "{} clique systems; count {} (recurrence) = {} (closed form) = {brute} (brute force)",
        systems.len(),
        counts.recurrence,
        counts.closed_form
    )))
}

/// Standard monomials form a basis in degrees up to 3, and
/// straightening of incomparable products obeys the dominance condition.
fn asl_basis(n: usize) -> Result<Outcome> {
    let mut dims = Vec::new();
    for d in 0..=3 {
        let c = standard_monomial_basis_check(n, d)?;
        if !c.passed {
            return Ok(Outcome::fail(format!("degree {d}: {c:?}")));
        }
        dims.push(c.standard.to_string());
    }
    if let Some((a, b, m)) = asl_dominance_holds(n)? {
        return Ok(Outcome::fail(format!("straightening {a}*{b} produces {m}, not dominated")));
    }
    let pairs = all_pairs(n);
    for (k, &a) in pairs.iter().enumerate() {
        for &b in &pairs[k..] {
            let f = Polynomial::monomial(Monomial::product([a.variable(), b.variable()]), crate::exactalg::Rational::from_integer(1.into()));
            let (rw, steps) = straighten_by_rewriting(&f)?;
            let nf = straighten(&f)?
                .into_iter()
                .fold(Polynomial::zero(), |acc, (c, m)| acc + Polynomial::monomial(m.to_monomial(), c));
            if rw != nf || steps.iter().any(|s| !s.dominated()) {
                return Ok(Outcome::fail(format!("rewriting {a}*{b} disagrees with the normal form")));
            }
        }
    }
    Ok(Outcome::pass(format!("standard monomial counts by degree: {}", dims.join(","))).with_param("max-degree", 3))
}

/// `M_{L_n}` has dimension `2n-3`, degree `C_{n-2}`, is equidimensional,
/// and its facets are the maximal arc arrangements.
fn stanley_reisner(n: usize) -> Result<Outcome> {
    let m = m_ideal(n);
    let s = stanley_reisner_analysis(&m);
    let cat = catalan(n as u64 - 2) as usize;
    if s.dimension != 2 * n - 3 || s.degree != cat || !s.equidimensional {
        return Ok(Outcome::fail(format!("{s:?}, expected dimension {} and degree {cat}", 2 * n - 3)));
    }
    let facets: BTreeSet<BTreeSet<PairIndex>> = m
        .stanley_reisner_complex()
        .facets()
        .iter()
        .map(|f| f.iter().filter_map(|v| PairIndex::from_variable(*v)).collect())
        .collect();
    let arcs: BTreeSet<BTreeSet<PairIndex>> = enumerate_maximal(n)?.into_iter().map(|a| a.arcs().clone()).collect();
    if facets != arcs {
        return Ok(Outcome::fail("facets differ from the maximal arc arrangements"));
    }
    Ok(Outcome::pass(format!(
        "dimension {}, degree {}, {} facets = maximal arc arrangements",
        s.dimension, s.degree, s.facets
    )))
}

/// Maximal arrangements are counted by Catalan numbers and correspond to
/// full binary trees with `n-1` leaves.
fn arcs_bijection(n: usize) -> Result<Outcome> {
    let all = enumerate_maximal(n)?;
    let cat = catalan(n as u64 - 2) as usize;
    if all.len() != cat {
        return Ok(Outcome::fail(format!("{} maximal arrangements, expected {cat}", all.len())));
    }
    if n <= 5 && enumerate_maximal_naive(n)? != all {
        return Ok(Outcome::fail("search disagrees with the subset filter"));
    }
    let mut shapes = BTreeSet::new();
    for a in &all {
        let t = FullBinaryTree::from_arrangement(a)?;
        if &t.to_arrangement()? != a || t.leaves() != n - 1 {
            return Ok(Outcome::fail(format!("round trip fails for {a}")));
        }
        shapes.insert(t.shape());
    }
    let every: BTreeSet<String> = full_binary_shapes(n - 1).into_iter().collect();
    if shapes != every {
        return Ok(Outcome::fail("tree shapes do not cover all full binary trees"));
    }
    Ok(Outcome::pass(format!("{cat} arrangements <-> {cat} full binary trees with {} leaves", n - 1)))
}
