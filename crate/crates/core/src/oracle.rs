//! Brute-force ground truth for quotient dimensions.
//!
//! The ideal generated by a set of multihomogeneous Lie elements is closed
//! under bracketing with the generators (on the left; antisymmetry and the
//! derivation rule make that span the full ideal). Components are processed
//! in increasing total degree, each one an incremental echelon basis in the
//! Lyndon coordinates of the ambient free Lie component; the quotient
//! dimension is the ambient dimension minus the rank.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::freelie::FreeLieContext;
use crate::linalg::EchelonBasis;
use crate::lyndon::{multidegrees_up_to, MultiDegree};
use crate::presentation::CompiledRelation;
use crate::series::GradedDims;

/// Components beyond this ambient dimension abort with a diagnostic
/// instead of thrashing.
pub const DEFAULT_COMPONENT_LIMIT: usize = 4096;

/// Per-multidegree echelon bases of an ideal, in Lyndon coordinates of the
/// ambient free Lie component.
#[derive(Debug, Default)]
pub struct IdealComponents {
    components: BTreeMap<MultiDegree, EchelonBasis>,
}

impl IdealComponents {
    pub fn rank(&self, alpha: &MultiDegree) -> usize {
        self.components.get(alpha).map_or(0, EchelonBasis::rank)
    }

    pub fn basis(&self, alpha: &MultiDegree) -> Option<&EchelonBasis> {
        self.components.get(alpha)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&MultiDegree, &EchelonBasis)> {
        self.components.iter()
    }
}

/// Close the relation set under left bracketing by generators, degree by
/// degree: component(a) is spanned by the relations of multidegree `a`
/// together with [x_i, v] for v in component(a - e_i).
pub fn ideal_closure(
    ctx: &mut FreeLieContext,
    relations: &[CompiledRelation],
    cutoff: u32,
    component_limit: usize,
) -> Result<IdealComponents> {
    let nletters = ctx.nletters();
    let mut by_degree: BTreeMap<MultiDegree, Vec<&CompiledRelation>> = BTreeMap::new();
    for r in relations {
        debug_assert_eq!(r.degree.len(), nletters);
        by_degree.entry(r.degree.clone()).or_default().push(r);
    }

    let mut out = IdealComponents::default();
    // (total, lex) order, so every a - e_i is already done
    for alpha in multidegrees_up_to(nletters, cutoff) {
        let ambient = ctx.component_dim(&alpha);
        if ambient > component_limit {
            return Err(Error::ComponentTooLarge {
                degree: format!("{alpha:?}"),
                dim: ambient,
                limit: component_limit,
            });
        }
        if ambient == 0 {
            continue;
        }
        let mut basis = EchelonBasis::new();
        if let Some(rels) = by_degree.get(&alpha) {
            for r in rels {
                let (_, v) = ctx.expand_to_vector(&r.poly)?;
                basis.insert(v);
            }
        }
        for i in 0..nletters {
            let Some(prev_degree) = alpha.sub_letter(i) else {
                continue;
            };
            if prev_degree.is_zero() {
                continue;
            }
            let Some(prev) = out.components.get(&prev_degree) else {
                continue;
            };
            let rows: Vec<_> = prev.rows().to_vec();
            for row in &rows {
                let lifted = ctx.ad_letter_vector(i as u8, &prev_degree, row);
                if !lifted.is_zero() {
                    basis.insert(lifted);
                }
            }
        }
        if basis.rank() > 0 {
            out.components.insert(alpha, basis);
        }
    }
    Ok(out)
}

/// Graded dimensions of the quotient of the free Lie algebra by the ideal
/// the relations generate: ambient Lyndon dimension minus ideal rank.
pub fn quotient_dims(
    ctx: &mut FreeLieContext,
    relations: &[CompiledRelation],
    cutoff: u32,
) -> Result<GradedDims> {
    quotient_dims_with_limit(ctx, relations, cutoff, DEFAULT_COMPONENT_LIMIT)
}

pub fn quotient_dims_with_limit(
    ctx: &mut FreeLieContext,
    relations: &[CompiledRelation],
    cutoff: u32,
    component_limit: usize,
) -> Result<GradedDims> {
    let ideal = ideal_closure(ctx, relations, cutoff, component_limit)?;
    let mut dims = GradedDims::new(ctx.nletters(), cutoff);
    for alpha in multidegrees_up_to(ctx.nletters(), cutoff) {
        let ambient = ctx.component_dim(&alpha);
        let rank = ideal.rank(&alpha);
        debug_assert!(rank <= ambient);
        dims.set(alpha, (ambient - rank) as u64);
    }
    Ok(dims)
}
