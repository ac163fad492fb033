//! The elimination engine: predicts the graded dimensions of
//! L(V + W) / <A, B> as a semidirect product g x L(N), where
//!
//!   g  = L(V) / <A>,
//!   M  = U(L(V)) . W       (the W-degree-1 slice of the free algebra),
//!   M1 = [M, <A>] + U(L(V)) . B,
//!   N  = M / M1,
//!
//! and verifies the prediction against the brute-force oracle. With
//! A = B = 0 this specializes to the classical Lazard decomposition
//! L(V + W) = L(V) x L(M).
//!
//! All of N is computed by linear algebra inside the W-degree-1 slice,
//! identifying M with that slice; M1 is a concrete row space per
//! multidegree.

use serde::Serialize;

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::freelie::{bracket, ContextPool, NCPolynomial};
use crate::linalg::{EchelonBasis, SparseVector};
use crate::lyndon::{multidegrees_up_to, MultiDegree};
use crate::oracle::{ideal_closure, quotient_dims, DEFAULT_COMPONENT_LIMIT};
use crate::presentation::{CompiledPresentation, CompiledRelation, Presentation};
use crate::series::{free_lie_dims, free_lie_on_module, pbw_series, GradedDims};

/// A compiled presentation whose relations are all of W-degree 0 (the set A)
/// or W-degree 1 (the set B).
#[derive(Clone, Debug)]
pub struct EliminationInput {
    pub compiled: CompiledPresentation,
    a_idx: Vec<usize>,
    b_idx: Vec<usize>,
}

impl EliminationInput {
    pub fn new(p: &Presentation) -> Result<Self> {
        Self::from_compiled(p.compile()?)
    }

    pub fn from_compiled(compiled: CompiledPresentation) -> Result<Self> {
        let mut a_idx = Vec::new();
        let mut b_idx = Vec::new();
        for (i, r) in compiled.relations.iter().enumerate() {
            match r.w_degree(compiled.v_count) {
                0 => a_idx.push(i),
                1 => b_idx.push(i),
                d => return Err(Error::WDegreeTooHigh(d)),
            }
        }
        Ok(EliminationInput { compiled, a_idx, b_idx })
    }

    pub fn a_relations(&self) -> impl Iterator<Item = &CompiledRelation> {
        self.a_idx.iter().map(|&i| &self.compiled.relations[i])
    }

    pub fn b_relations(&self) -> impl Iterator<Item = &CompiledRelation> {
        self.b_idx.iter().map(|&i| &self.compiled.relations[i])
    }

    fn nletters(&self) -> usize {
        self.compiled.alphabet.len()
    }

    fn v_count(&self) -> usize {
        self.compiled.v_count
    }

    fn w_degree_of(&self, alpha: &MultiDegree) -> u32 {
        alpha.degree_over(self.v_count()..self.nletters())
    }
}

/// Graded dimensions supported only on the W-degree-1 slice.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct ModuleDims(pub GradedDims);

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Mismatch {
    pub degree: MultiDegree,
    pub predicted: u64,
    pub oracle: u64,
}

#[derive(Debug, Serialize)]
pub struct EliminationReport {
    pub g_dims: GradedDims,
    pub m_dims: ModuleDims,
    pub n_dims: ModuleDims,
    pub predicted: GradedDims,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub oracle: Option<GradedDims>,
    pub mismatches: Vec<Mismatch>,
}

impl EliminationReport {
    /// Tab-separated dump: degree vector, predicted, oracle, match. Rows
    /// where both pipelines are zero are omitted.
    pub fn tsv(&self) -> String {
        let mut out = String::from("degree\tpredicted\toracle\tmatch\n");
        let cutoff = self.predicted.cutoff();
        for alpha in multidegrees_up_to(self.predicted.nletters(), cutoff) {
            let p = self.predicted.get(&alpha);
            let o = self.oracle.as_ref().map(|t| t.get(&alpha));
            if p == 0 && o.unwrap_or(0) == 0 {
                continue;
            }
            let (o_col, m_col) = match o {
                Some(o) => (o.to_string(), if o == p { "ok" } else { "MISMATCH" }.into()),
                None => ("-".to_string(), "-".to_string()),
            };
            out.push_str(&format!("{alpha}\t{p}\t{o_col}\t{m_col}\n"));
        }
        out
    }
}

/// Dimensions of g = L(V)/<A>, embedded in the full degree lattice with
/// zero W-coordinates.
pub fn compute_g(input: &EliminationInput, pool: &mut ContextPool, cutoff: u32) -> Result<GradedDims> {
    let (nletters, v_count) = (input.nletters(), input.v_count());
    if v_count == 0 {
        return Ok(GradedDims::new(nletters, cutoff));
    }
    let a_rels: Vec<CompiledRelation> = input
        .a_relations()
        .map(|r| restrict_to_v(r, v_count))
        .collect();
    let ctx = pool.ctx(v_count);
    let dims = quotient_dims(ctx, &a_rels, cutoff)?;
    Ok(dims.embed_prefix(nletters))
}

fn restrict_to_v(r: &CompiledRelation, v_count: usize) -> CompiledRelation {
    CompiledRelation {
        degree: MultiDegree::new(r.degree.counts()[..v_count].to_vec()),
        poly: r.poly.reletter(v_count),
    }
}

/// Dimensions of M = U(L(V)) . W: a free U(L(V))-module on the W
/// generators, so the dimension at (b, e_j) is the PBW coefficient of the
/// free Lie algebra on V at b. With `cross_check` set, the dimensions are
/// verified against the Lyndon-word count of each W-degree-1 component.
pub fn compute_m_dims(
    input: &EliminationInput,
    pool: &mut ContextPool,
    cutoff: u32,
    cross_check: bool,
) -> Result<ModuleDims> {
    let (nletters, v_count) = (input.nletters(), input.v_count());
    let w_count = nletters - v_count;
    let mut dims = GradedDims::new(nletters, cutoff);
    let enveloping = if v_count == 0 {
        None
    } else {
        Some(pbw_series(&free_lie_dims(v_count, cutoff), cutoff))
    };
    for j in 0..w_count {
        // beta = 0 contributes the W generator itself
        let mut set = |beta_counts: Vec<u32>, d: u64| {
            let mut counts = beta_counts;
            counts.resize(nletters, 0);
            counts[v_count + j] = 1;
            dims.set(MultiDegree::new(counts), d);
        };
        set(vec![0; v_count], 1);
        if let Some(u) = &enveloping {
            for beta in multidegrees_up_to(v_count, cutoff.saturating_sub(1)) {
                set(beta.counts().to_vec(), u.get(&beta));
            }
        }
    }
    if cross_check {
        let ctx = pool.ctx(nletters);
        for alpha in multidegrees_up_to(nletters, cutoff) {
            if input.w_degree_of(&alpha) != 1 {
                continue;
            }
            let expect = ctx.component_dim(&alpha) as u64;
            if dims.get(&alpha) != expect {
                return Err(Error::Internal(format!(
                    "module dimension at {alpha:?}: PBW gives {}, Lyndon count gives {expect}",
                    dims.get(&alpha)
                )));
            }
        }
    }
    Ok(ModuleDims(dims))
}

/// Dimensions of N = M / M1 with M1 = [M, <A>] + U(L(V)) . B, computed
/// blockwise inside the W-degree-1 slice: per multidegree, M1 is the row
/// space spanned by the ad-closure of B under the V generators together
/// with the brackets of M basis elements against <A>-closure elements.
///
/// Also runs the g-module well-definedness check: every such bracket must
/// land in M1 (true by construction; a nonzero residual signals an
/// expansion bug).
pub fn compute_n_dims(
    input: &EliminationInput,
    pool: &mut ContextPool,
    cutoff: u32,
) -> Result<ModuleDims> {
    let (nletters, v_count) = (input.nletters(), input.v_count());

    // <A>-closure inside L(V), as polynomials over the full alphabet,
    // keyed by their V-multidegree embedded in the full lattice
    let mut a_polys: BTreeMap<MultiDegree, Vec<NCPolynomial>> = BTreeMap::new();
    if v_count > 0 && !input.a_idx.is_empty() {
        let a_rels: Vec<CompiledRelation> = input
            .a_relations()
            .map(|r| restrict_to_v(r, v_count))
            .collect();
        let ctx_v = pool.ctx(v_count);
        let closure = ideal_closure(ctx_v, &a_rels, cutoff.saturating_sub(1), DEFAULT_COMPONENT_LIMIT)?;
        for (beta, basis) in closure.iter() {
            let rows: Vec<SparseVector> = basis.rows().to_vec();
            let polys: Vec<NCPolynomial> = rows
                .iter()
                .map(|row| ctx_v.vector_to_poly(beta, row).reletter(nletters))
                .collect();
            let mut counts = beta.counts().to_vec();
            counts.resize(nletters, 0);
            a_polys.insert(MultiDegree::new(counts), polys);
        }
    }

    let b_by_degree: BTreeMap<MultiDegree, Vec<&CompiledRelation>> = {
        let mut map: BTreeMap<MultiDegree, Vec<&CompiledRelation>> = BTreeMap::new();
        for r in input.b_relations() {
            map.entry(r.degree.clone()).or_default().push(r);
        }
        map
    };

    let ctx = pool.ctx(nletters);
    let mut b_closure: BTreeMap<MultiDegree, EchelonBasis> = BTreeMap::new();
    let mut dims = GradedDims::new(nletters, cutoff);

    for alpha in multidegrees_up_to(nletters, cutoff) {
        if input.w_degree_of(&alpha) != 1 {
            continue;
        }
        let ambient = ctx.component_dim(&alpha);

        // ad-closure of B under the V generators
        let mut b_basis = EchelonBasis::new();
        if let Some(rels) = b_by_degree.get(&alpha) {
            for r in rels {
                let (_, v) = ctx.expand_to_vector(&r.poly)?;
                b_basis.insert(v);
            }
        }
        for i in 0..v_count {
            let Some(prev_degree) = alpha.sub_letter(i) else { continue };
            let Some(prev) = b_closure.get(&prev_degree) else { continue };
            let rows: Vec<SparseVector> = prev.rows().to_vec();
            for row in &rows {
                let lifted = ctx.ad_letter_vector(i as u8, &prev_degree, row);
                if !lifted.is_zero() {
                    b_basis.insert(lifted);
                }
            }
        }

        // M1 = span(B-closure) + [M, <A>-closure]
        let mut m1 = b_basis.clone();
        let mut module_check_rows: Vec<SparseVector> = Vec::new();
        for (beta, polys) in &a_polys {
            let Some(gamma) = alpha.checked_sub(beta) else { continue };
            debug_assert!(input.w_degree_of(&gamma) == 1);
            let m_basis = ctx.lyndon_basis(&gamma);
            for m_word in m_basis.iter() {
                let m_poly = ctx.realized(m_word);
                for a_poly in polys {
                    let p = bracket(&m_poly, a_poly);
                    if p.is_zero() {
                        continue;
                    }
                    let (_, v) = ctx.expand_to_vector(&p)?;
                    m1.insert(v.clone());
                    module_check_rows.push(v);
                }
            }
        }

        for v in &module_check_rows {
            if !m1.reduce(v).is_zero() {
                return Err(Error::Internal(format!(
                    "[<A>, M] does not land in M1 at {alpha:?}"
                )));
            }
        }

        debug_assert!(m1.rank() <= ambient);
        dims.set(alpha.clone(), (ambient - m1.rank()) as u64);
        if b_basis.rank() > 0 {
            b_closure.insert(alpha, b_basis);
        }
    }
    Ok(ModuleDims(dims))
}

/// Assemble the predicted quotient dimensions: g on the W-degree-0 slice,
/// the free Lie algebra on N everywhere else.
pub fn predict_quotient(
    g: &GradedDims,
    n: &ModuleDims,
    v_count: usize,
    cutoff: u32,
) -> Result<GradedDims> {
    let nletters = g.nletters();
    assert_eq!(n.0.nletters(), nletters);
    let free_on_n = free_lie_on_module(&n.0, cutoff)?;
    let mut out = GradedDims::new(nletters, cutoff);
    for (alpha, d) in g.iter() {
        debug_assert_eq!(alpha.degree_over(v_count..nletters), 0);
        out.set(alpha.clone(), d);
    }
    for (alpha, d) in free_on_n.iter() {
        debug_assert!(alpha.degree_over(v_count..nletters) >= 1);
        out.set(alpha.clone(), d);
    }
    Ok(out)
}

/// Run the full pipeline; with `with_oracle` the brute-force quotient is
/// computed as well and any disagreements are listed (a nonempty mismatch
/// list is a result, not an error).
pub fn run(
    input: &EliminationInput,
    pool: &mut ContextPool,
    cutoff: u32,
    with_oracle: bool,
) -> Result<EliminationReport> {
    let g_dims = compute_g(input, pool, cutoff)?;
    let m_dims = compute_m_dims(input, pool, cutoff, true)?;
    let n_dims = compute_n_dims(input, pool, cutoff)?;
    let predicted = predict_quotient(&g_dims, &n_dims, input.v_count(), cutoff)?;
    let (oracle, mismatches) = if with_oracle {
        let ctx = pool.ctx(input.nletters());
        let oracle = quotient_dims(ctx, &input.compiled.relations, cutoff)?;
        let mismatches = predicted
            .mismatches(&oracle, cutoff)
            .into_iter()
            .map(|(degree, predicted, oracle)| Mismatch { degree, predicted, oracle })
            .collect();
        (Some(oracle), mismatches)
    } else {
        (None, Vec::new())
    };
    Ok(EliminationReport { g_dims, m_dims, n_dims, predicted, oracle, mismatches })
}

/// Both pipelines plus the comparison.
pub fn verify_theorem1(
    input: &EliminationInput,
    pool: &mut ContextPool,
    cutoff: u32,
) -> Result<EliminationReport> {
    run(input, pool, cutoff, true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presentation::{GeneratorDecl, RelationExpr};
    use crate::series::witt_dim;

    fn md(counts: &[u32]) -> MultiDegree {
        MultiDegree::new(counts.to_vec())
    }

    fn input(gens: Vec<GeneratorDecl>, rels: Vec<RelationExpr>) -> EliminationInput {
        EliminationInput::new(&Presentation { generators: gens, relations: rels }).unwrap()
    }

    #[test]
    fn w_degree_two_relations_are_rejected() {
        let p = Presentation {
            generators: vec![GeneratorDecl::v("a"), GeneratorDecl::w("b")],
            relations: vec![RelationExpr::bracket(
                RelationExpr::gen("b"),
                RelationExpr::bracket(RelationExpr::gen("a"), RelationExpr::gen("b")),
            )],
        };
        assert_eq!(EliminationInput::new(&p).unwrap_err(), Error::WDegreeTooHigh(2));
    }

    #[test]
    fn lazard_case_one_v_one_w() {
        // A = B = 0: predicted dims must be the Witt dims of the full
        // alphabet, and dim M at (k, 1) is 1 for every k
        let input = input(vec![GeneratorDecl::v("a"), GeneratorDecl::w("b")], vec![]);
        let mut pool = ContextPool::new();
        let report = verify_theorem1(&input, &mut pool, 6).unwrap();
        assert!(report.mismatches.is_empty());
        for k in 0..=5u32 {
            assert_eq!(report.m_dims.0.get(&md(&[k, 1])), 1);
        }
        for alpha in multidegrees_up_to(2, 6) {
            assert_eq!(report.predicted.get(&alpha), witt_dim(&alpha), "{alpha:?}");
        }
    }

    #[test]
    fn m_dims_over_two_v_letters() {
        // dim M at V-degree n sums to 2^n per W slot
        let input = input(
            vec![GeneratorDecl::v("a"), GeneratorDecl::v("c"), GeneratorDecl::w("b")],
            vec![],
        );
        let mut pool = ContextPool::new();
        let m = compute_m_dims(&input, &mut pool, 6, true).unwrap();
        for n in 0..=5u32 {
            let total: u64 = multidegrees_up_to(3, 6)
                .into_iter()
                .filter(|a| a.get(2) == 1 && a.get(0) + a.get(1) == n)
                .map(|a| m.0.get(&a))
                .sum();
            assert_eq!(total, 2u64.pow(n), "V-degree {n}");
        }
    }

    #[test]
    fn m_dims_double_per_w_slot() {
        let input = input(
            vec![GeneratorDecl::v("a"), GeneratorDecl::w("b"), GeneratorDecl::w("c")],
            vec![],
        );
        let mut pool = ContextPool::new();
        let m = compute_m_dims(&input, &mut pool, 5, true).unwrap();
        for k in 0..=4u32 {
            assert_eq!(m.0.get(&md(&[k, 1, 0])), 1);
            assert_eq!(m.0.get(&md(&[k, 0, 1])), 1);
        }
    }

    #[test]
    fn serre_relation_kills_high_ad_powers() {
        // B = {(ad a)^2 b}: N is spanned by b and [a, b] only
        let input = input(
            vec![GeneratorDecl::v("a"), GeneratorDecl::w("b")],
            vec![RelationExpr::adpow("a", 2, RelationExpr::gen("b"))],
        );
        let mut pool = ContextPool::new();
        let n = compute_n_dims(&input, &mut pool, 6).unwrap();
        assert_eq!(n.0.get(&md(&[0, 1])), 1);
        assert_eq!(n.0.get(&md(&[1, 1])), 1);
        for (alpha, d) in n.0.iter() {
            assert!(alpha.total() <= 2 || d == 0, "unexpected N dim at {alpha:?}");
        }
    }

    #[test]
    fn sl2_half_predicted_matches_oracle() {
        let input = input(
            vec![GeneratorDecl::v("a"), GeneratorDecl::w("b")],
            vec![RelationExpr::adpow("a", 2, RelationExpr::gen("b"))],
        );
        let mut pool = ContextPool::new();
        let report = verify_theorem1(&input, &mut pool, 6).unwrap();
        assert!(report.mismatches.is_empty(), "{:?}", report.mismatches);
        // spot values confirmed by the oracle: [b,[a,b]] survives at (1,2),
        // while (2,2) dies because [a,[b,[a,b]]] lies in the ideal
        assert_eq!(report.predicted.get(&md(&[1, 2])), 1);
        assert_eq!(report.predicted.get(&md(&[2, 2])), 0);
        assert_eq!(report.oracle.as_ref().unwrap().get(&md(&[1, 2])), 1);
        assert_eq!(report.oracle.as_ref().unwrap().get(&md(&[2, 2])), 0);
    }

    #[test]
    fn abelian_g_acting_on_one_w() {
        // V = {a, c} with A = {[a,c]}, B empty: N is one-dimensional in
        // every (beta, 1) block, matching U(abelian) . w
        let input = input(
            vec![GeneratorDecl::v("a"), GeneratorDecl::v("c"), GeneratorDecl::w("w")],
            vec![RelationExpr::bracket(RelationExpr::gen("a"), RelationExpr::gen("c"))],
        );
        let mut pool = ContextPool::new();
        let report = verify_theorem1(&input, &mut pool, 5).unwrap();
        assert!(report.mismatches.is_empty(), "{:?}", report.mismatches);
        for alpha in multidegrees_up_to(3, 5) {
            if alpha.get(2) == 1 {
                assert_eq!(report.n_dims.0.get(&alpha), 1, "alpha={alpha:?}");
            }
        }
    }

    #[test]
    fn killing_all_w_generators_reproduces_g() {
        // Lemma-1 shape: B = the W generators themselves, so N = 0 and the
        // quotient is exactly g
        let input = input(
            vec![GeneratorDecl::v("a"), GeneratorDecl::v("b"), GeneratorDecl::w("w")],
            vec![RelationExpr::gen("w")],
        );
        let mut pool = ContextPool::new();
        let report = verify_theorem1(&input, &mut pool, 5).unwrap();
        assert!(report.mismatches.is_empty());
        assert!(report.n_dims.0.is_empty());
        assert_eq!(report.predicted, report.g_dims);
    }

    #[test]
    fn empty_w_reduces_to_g() {
        let input = input(
            vec![GeneratorDecl::v("a"), GeneratorDecl::v("b")],
            vec![RelationExpr::adpow("a", 2, RelationExpr::gen("b"))],
        );
        let mut pool = ContextPool::new();
        let report = verify_theorem1(&input, &mut pool, 5).unwrap();
        assert!(report.mismatches.is_empty());
        assert_eq!(report.predicted, report.g_dims);
        assert!(report.n_dims.0.is_empty());
    }

    #[test]
    fn empty_v_gives_free_lie_on_w() {
        let input = input(
            vec![GeneratorDecl::w("u"), GeneratorDecl::w("w")],
            vec![],
        );
        let mut pool = ContextPool::new();
        let report = verify_theorem1(&input, &mut pool, 6).unwrap();
        assert!(report.mismatches.is_empty());
        assert!(report.g_dims.is_empty());
        for alpha in multidegrees_up_to(2, 6) {
            assert_eq!(report.predicted.get(&alpha), witt_dim(&alpha));
        }
    }

    #[test]
    fn report_tsv_shape() {
        let input = input(
            vec![GeneratorDecl::v("a"), GeneratorDecl::w("b")],
            vec![RelationExpr::adpow("a", 2, RelationExpr::gen("b"))],
        );
        let mut pool = ContextPool::new();
        let report = verify_theorem1(&input, &mut pool, 3).unwrap();
        let tsv = report.tsv();
        let mut lines = tsv.lines();
        assert_eq!(lines.next().unwrap(), "degree\tpredicted\toracle\tmatch");
        assert!(tsv.contains("0,1\t1\t1\tok"));
        assert!(tsv.contains("1,1\t1\t1\tok"));
    }
}
