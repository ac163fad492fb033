//! Borcherds-Cartan matrices, Serre-type relation sets, S/T splits, and
//! root multiplicity tables for the nilpotent subalgebras n+/n-.
//!
//! The exponent convention: n_ij = 1 - 2 a_ij / a_ii when a_ii > 0, and
//! n_ij = 1 otherwise. Relations (ad x_i)^{n_ij} x_j occur for (i,j) with
//! i != j whenever a_ii > 0, or when a_ii <= 0 and a_ij = 0.
//!
//! A split S/T is usable by the elimination engine when no relation pairs
//! two T indices, and every relation from T into S has exponent 1 (such a
//! relation [x_i, x_j] folds into B via antisymmetry; higher exponents
//! would need W-degree >= 2 and the split is rejected with a diagnostic).

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::elimination::{self, EliminationInput, Mismatch};
use crate::error::{Error, Result};
use crate::freelie::ContextPool;
use crate::oracle::quotient_dims;
use crate::presentation::{GeneratorDecl, Presentation, RelationExpr};
use crate::rational::Rational;
use crate::series::GradedDims;

/// A square matrix of rationals subject to the generalized Kac-Moody
/// conditions (checked by [`validate_matrix`], not by construction).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BorcherdsCartanMatrix {
    entries: Vec<Vec<Rational>>,
}

impl BorcherdsCartanMatrix {
    pub fn new(entries: Vec<Vec<Rational>>) -> Result<Self> {
        let n = entries.len();
        if n == 0 {
            return Err(Error::InvalidMatrix("matrix is empty".into()));
        }
        if entries.iter().any(|row| row.len() != n) {
            return Err(Error::InvalidMatrix(format!(
                "matrix is not square: {n} rows but a row of different length"
            )));
        }
        Ok(BorcherdsCartanMatrix { entries })
    }

    pub fn from_ints(rows: &[&[i64]]) -> Self {
        Self::new(
            rows.iter()
                .map(|r| r.iter().map(|&x| Rational::from_int(x)).collect())
                .collect(),
        )
        .expect("square integer matrix")
    }

    pub fn size(&self) -> usize {
        self.entries.len()
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.entries[i][j]
    }
}

/// Check the generalized Kac-Moody matrix conditions; an empty list means
/// the matrix is valid. Indices in diagnostics are 0-based, matching the
/// file format.
pub fn validate_matrix(m: &BorcherdsCartanMatrix) -> Vec<String> {
    let n = m.size();
    let mut diags = Vec::new();
    let zero = Rational::zero();

    for i in 0..n {
        for j in 0..n {
            if i == j {
                continue;
            }
            let a = m.get(i, j);
            if !a.is_zero() && !a.is_negative() {
                diags.push(format!("a[{i}][{j}] = {a} must be nonpositive off the diagonal"));
            }
            if (a == &zero) != (m.get(j, i) == &zero) {
                diags.push(format!(
                    "zero symmetry violated: a[{i}][{j}] = {a} but a[{j}][{i}] = {}",
                    m.get(j, i)
                ));
            }
        }
    }

    // integrality for rows with positive diagonal
    for i in 0..n {
        let aii = m.get(i, i);
        if aii.is_zero() || aii.is_negative() {
            continue;
        }
        for j in 0..n {
            if i == j {
                continue;
            }
            let ratio = &(&Rational::from_int(2) * m.get(i, j)) / aii;
            if !ratio.is_integer() || (!ratio.is_zero() && !ratio.is_negative()) {
                diags.push(format!(
                    "2 a[{i}][{j}] / a[{i}][{i}] = {ratio} must be a nonpositive integer"
                ));
            }
        }
    }

    // symmetrizability: propagate the diagonal scaling d along the graph of
    // nonzero off-diagonal entries and check consistency on every edge
    let mut d: Vec<Option<Rational>> = vec![None; n];
    for root in 0..n {
        if d[root].is_some() {
            continue;
        }
        d[root] = Some(Rational::one());
        let mut queue = vec![root];
        while let Some(i) = queue.pop() {
            let di = d[i].clone().expect("visited");
            for j in 0..n {
                if i == j || m.get(i, j).is_zero() || m.get(j, i).is_zero() {
                    continue;
                }
                // d_i a_ij = d_j a_ji
                let expected = &(&di * m.get(i, j)) / m.get(j, i);
                match &d[j] {
                    None => {
                        d[j] = Some(expected);
                        queue.push(j);
                    }
                    Some(dj) if dj != &expected => {
                        diags.push(format!(
                            "not symmetrizable: inconsistent scaling at index {j}"
                        ));
                    }
                    _ => {}
                }
            }
        }
    }

    diags.sort();
    diags.dedup();
    diags
}

fn require_valid(m: &BorcherdsCartanMatrix) -> Result<()> {
    let diags = validate_matrix(m);
    if diags.is_empty() {
        Ok(())
    } else {
        Err(Error::InvalidMatrix(diags.join("; ")))
    }
}

/// The Serre-type relation pairs (i, j) with their exponents n_ij.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct RelationSet {
    pairs: BTreeMap<(usize, usize), u32>,
}

impl RelationSet {
    pub fn exponent(&self, i: usize, j: usize) -> Option<u32> {
        self.pairs.get(&(i, j)).copied()
    }

    pub fn contains(&self, i: usize, j: usize) -> bool {
        self.pairs.contains_key(&(i, j))
    }

    pub fn iter(&self) -> impl Iterator<Item = ((usize, usize), u32)> + '_ {
        self.pairs.iter().map(|(&p, &e)| (p, e))
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }
}

/// Relations occur for i != j whenever a_ii > 0, or when a_ii <= 0 and
/// a_ij = 0; the exponent is 1 - 2 a_ij / a_ii for a_ii > 0 and 1 otherwise.
pub fn serre_relation_set(m: &BorcherdsCartanMatrix) -> Result<RelationSet> {
    require_valid(m)?;
    let n = m.size();
    let mut pairs = BTreeMap::new();
    for i in 0..n {
        let aii = m.get(i, i);
        let real = !aii.is_zero() && !aii.is_negative();
        for j in 0..n {
            if i == j {
                continue;
            }
            if real {
                let ratio = &(&Rational::from_int(2) * m.get(i, j)) / aii;
                let nij = (&Rational::one() - &ratio)
                    .to_integer()
                    .expect("validated integrality");
                pairs.insert((i, j), u32::try_from(nij).expect("n_ij >= 1"));
            } else if m.get(i, j).is_zero() {
                pairs.insert((i, j), 1);
            }
        }
    }
    Ok(RelationSet { pairs })
}

/// A disjoint split of the index set; generators indexed by S go to the
/// V-part, those indexed by T to the W-part.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SplitChoice {
    #[serde(rename = "S")]
    pub s: Vec<usize>,
    #[serde(rename = "T")]
    pub t: Vec<usize>,
}

impl SplitChoice {
    pub fn trivial(n: usize) -> Self {
        SplitChoice { s: (0..n).collect(), t: Vec::new() }
    }

    pub fn new(s: Vec<usize>, t: Vec<usize>) -> Self {
        SplitChoice { s, t }
    }
}

/// Check a split against the relation set. An empty list means the split is
/// usable. The first kind of violation breaks the decomposition hypothesis
/// itself; the second is the engineering restriction to W-degree-1
/// relations.
pub fn validate_split(m: &BorcherdsCartanMatrix, split: &SplitChoice) -> Result<Vec<String>> {
    let r = serre_relation_set(m)?;
    let n = m.size();
    let mut violations = Vec::new();

    let s_set: BTreeSet<usize> = split.s.iter().copied().collect();
    let t_set: BTreeSet<usize> = split.t.iter().copied().collect();
    if s_set.len() != split.s.len() || t_set.len() != split.t.len() {
        violations.push("split lists contain duplicates".into());
    }
    if !s_set.is_disjoint(&t_set) {
        violations.push("S and T overlap".into());
    }
    let all: BTreeSet<usize> = (0..n).collect();
    if s_set.union(&t_set).copied().collect::<BTreeSet<_>>() != all {
        violations.push(format!("S and T must cover every index 0..{}", n - 1));
    }

    for &i in &t_set {
        for &j in &t_set {
            if i != j && r.contains(i, j) {
                violations.push(format!(
                    "pair ({i},{j}) lies in R with both indices in T"
                ));
            }
        }
    }
    for ((i, j), e) in r.iter() {
        if t_set.contains(&i) && s_set.contains(&j) {
            if e != 1 {
                violations.push(format!(
                    "relation ({i},{j}) maps T into S with exponent {e}; only exponent-1 \
                     relations fold into the W-degree-1 part, so this split is not usable"
                ));
            } else if r.exponent(j, i) != Some(1) {
                violations.push(format!(
                    "relation ({i},{j}) has no exponent-1 mate ({j},{i}) to fold into"
                ));
            }
        }
    }
    Ok(violations)
}

fn require_valid_split(m: &BorcherdsCartanMatrix, split: &SplitChoice) -> Result<RelationSet> {
    let violations = validate_split(m, split)?;
    if !violations.is_empty() {
        return Err(Error::InvalidSplit(violations.join("; ")));
    }
    serre_relation_set(m)
}

/// Greedy default split: scan indices in order, moving i to T when its
/// diagonal is nonpositive and doing so violates neither the T-T condition
/// against the current T nor the exponent-1 condition toward the rest.
pub fn auto_split(m: &BorcherdsCartanMatrix) -> Result<SplitChoice> {
    let r = serre_relation_set(m)?;
    let n = m.size();
    let mut t: Vec<usize> = Vec::new();
    for i in 0..n {
        let aii = m.get(i, i);
        if !aii.is_zero() && !aii.is_negative() {
            continue; // real row stays in S
        }
        let tt_ok = t
            .iter()
            .all(|&x| !r.contains(x, i) && !r.contains(i, x));
        let fold_ok = (0..n).filter(|&j| j != i && !t.contains(&j)).all(|j| {
            match r.exponent(i, j) {
                None => true,
                Some(e) => e == 1 && r.exponent(j, i) == Some(1),
            }
        });
        if tt_ok && fold_ok {
            t.push(i);
        }
    }
    let s: Vec<usize> = (0..n).filter(|i| !t.contains(i)).collect();
    Ok(SplitChoice::new(s, t))
}

/// The generators and relations of the nilpotent algebra n arranged for the
/// elimination engine: V = x_i for i in S, W = x_j for j in T,
/// A = relations within S, B = relations from S into T plus the folded
/// exponent-1 relations from T into S.
pub struct NilpotentPresentation {
    pub input: EliminationInput,
    /// presentation slot k holds the generator of index `slot_to_index[k]`
    pub slot_to_index: Vec<usize>,
}

pub fn build_nilpotent_presentation(
    m: &BorcherdsCartanMatrix,
    split: &SplitChoice,
) -> Result<NilpotentPresentation> {
    let r = require_valid_split(m, split)?;
    let mut s_sorted = split.s.clone();
    s_sorted.sort_unstable();
    let mut t_sorted = split.t.clone();
    t_sorted.sort_unstable();

    let name = |i: usize| format!("x{}", i + 1);
    let mut generators = Vec::new();
    for &i in &s_sorted {
        generators.push(GeneratorDecl::v(&name(i)));
    }
    for &j in &t_sorted {
        generators.push(GeneratorDecl::w(&name(j)));
    }

    let s_set: BTreeSet<usize> = s_sorted.iter().copied().collect();
    let t_set: BTreeSet<usize> = t_sorted.iter().copied().collect();

    let mut relations = Vec::new();
    let mut b_keys: BTreeSet<(usize, u32, usize)> = BTreeSet::new();
    for ((i, j), e) in r.iter() {
        if s_set.contains(&i) && s_set.contains(&j) {
            relations.push(RelationExpr::adpow(&name(i), e, RelationExpr::gen(&name(j))));
        } else if s_set.contains(&i) && t_set.contains(&j) {
            if b_keys.insert((i, e, j)) {
                relations.push(RelationExpr::adpow(&name(i), e, RelationExpr::gen(&name(j))));
            }
        } else if t_set.contains(&i) && s_set.contains(&j) {
            // exponent 1 (validated); [x_i, x_j] = -[x_j, x_i] folds into B
            debug_assert_eq!(e, 1);
            if b_keys.insert((j, 1, i)) {
                relations.push(RelationExpr::adpow(&name(j), 1, RelationExpr::gen(&name(i))));
            }
        }
        // T-T pairs are excluded by split validation
    }

    let presentation = Presentation { generators, relations };
    let input = EliminationInput::new(&presentation)?;
    let mut slot_to_index = s_sorted;
    slot_to_index.extend_from_slice(&t_sorted);
    Ok(NilpotentPresentation { input, slot_to_index })
}

/// Presentation of the whole nilpotent algebra over the index order, for
/// the brute-force pipeline: every generator in V, every Serre relation.
fn full_presentation(m: &BorcherdsCartanMatrix) -> Result<Presentation> {
    let r = serre_relation_set(m)?;
    let name = |i: usize| format!("x{}", i + 1);
    let generators = (0..m.size()).map(|i| GeneratorDecl::v(&name(i))).collect();
    let relations = r
        .iter()
        .map(|((i, j), e)| RelationExpr::adpow(&name(i), e, RelationExpr::gen(&name(j))))
        .collect();
    Ok(Presentation { generators, relations })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Sign {
    #[serde(rename = "+")]
    Plus,
    #[serde(rename = "-")]
    Minus,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Theorem,
    Oracle,
    Both,
}

/// Root multiplicities of n+ (or n-, which is identical and differs only in
/// the sign label) indexed by root-lattice vectors over I in file order.
/// The Cartan subalgebra contributes `cartan_rank` dimensions at height
/// zero and is reported as metadata only.
#[derive(Debug, Serialize)]
pub struct RootMultiplicityTable {
    pub sign: Sign,
    pub method: Method,
    pub cartan_rank: usize,
    pub multiplicities: GradedDims,
    pub mismatches: Vec<Mismatch>,
}

impl RootMultiplicityTable {
    pub fn with_sign(mut self, sign: Sign) -> Self {
        self.sign = sign;
        self
    }

    /// Tab-separated rows: root vector, multiplicity, method.
    pub fn tsv(&self) -> String {
        let method = match self.method {
            Method::Theorem => "theorem",
            Method::Oracle => "oracle",
            Method::Both => "both",
        };
        let mut out = String::from("root\tmultiplicity\tmethod\n");
        for (alpha, d) in self.multiplicities.iter() {
            out.push_str(&format!("{alpha}\t{d}\t{method}\n"));
        }
        out
    }
}

/// Root multiplicities up to the given height. The theorem method runs the
/// elimination pipeline on the split presentation; the oracle method closes
/// the full relation set by brute force; `both` runs the two and records
/// mismatches (none expected).
pub fn root_multiplicities(
    m: &BorcherdsCartanMatrix,
    split: &SplitChoice,
    pool: &mut ContextPool,
    cutoff: u32,
    method: Method,
) -> Result<RootMultiplicityTable> {
    let rank = m.size();
    let theorem_dims = |pool: &mut ContextPool| -> Result<GradedDims> {
        let np = build_nilpotent_presentation(m, split)?;
        let report = elimination::run(&np.input, pool, cutoff, false)?;
        Ok(report.predicted.permute(&np.slot_to_index))
    };
    let oracle_dims = |pool: &mut ContextPool| -> Result<GradedDims> {
        require_valid_split(m, split)?;
        let compiled = full_presentation(m)?.compile()?;
        quotient_dims(pool.ctx(rank), &compiled.relations, cutoff)
    };

    let (dims, mismatches) = match method {
        Method::Theorem => (theorem_dims(pool)?, Vec::new()),
        Method::Oracle => (oracle_dims(pool)?, Vec::new()),
        Method::Both => {
            let predicted = theorem_dims(pool)?;
            let oracle = oracle_dims(pool)?;
            let mismatches = predicted
                .mismatches(&oracle, cutoff)
                .into_iter()
                .map(|(degree, predicted, oracle)| Mismatch { degree, predicted, oracle })
                .collect();
            (predicted, mismatches)
        }
    };
    Ok(RootMultiplicityTable {
        sign: Sign::Plus,
        method,
        cartan_rank: rank,
        multiplicities: dims,
        mismatches,
    })
}

/// An irreflexive commutation graph: listed pairs of generators commute.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CommutationGraph {
    pub vertices: usize,
    pub commuting_pairs: Vec<(usize, usize)>,
}

impl CommutationGraph {
    pub fn validate(&self) -> Result<()> {
        for &(i, j) in &self.commuting_pairs {
            if i == j {
                return Err(Error::InvalidMatrix(format!(
                    "commutation graph must be irreflexive, got pair ({i},{i})"
                )));
            }
            if i >= self.vertices || j >= self.vertices {
                return Err(Error::InvalidMatrix(format!(
                    "pair ({i},{j}) is out of range for {} vertices",
                    self.vertices
                )));
            }
        }
        Ok(())
    }

    /// The matrix with a_ii = -2, a_ij = 0 on commuting pairs and
    /// a_ij = -1 otherwise.
    pub fn matrix(&self) -> Result<BorcherdsCartanMatrix> {
        self.validate()?;
        let n = self.vertices;
        let commutes = |i: usize, j: usize| {
            self.commuting_pairs
                .iter()
                .any(|&(a, b)| (a, b) == (i, j) || (b, a) == (i, j))
        };
        let entries = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        if i == j {
                            Rational::from_int(-2)
                        } else if commutes(i, j) {
                            Rational::zero()
                        } else {
                            Rational::from_int(-1)
                        }
                    })
                    .collect()
            })
            .collect();
        BorcherdsCartanMatrix::new(entries)
    }
}

/// Graded dimensions of the free partially commutative Lie algebra on the
/// graph: all diagonal entries are imaginary and the relations are exactly
/// the commutators of listed pairs. Computed by the oracle; when the greedy
/// split is nontrivial the elimination pipeline is run as a cross-check.
pub fn fpc_dims(graph: &CommutationGraph, pool: &mut ContextPool, cutoff: u32) -> Result<GradedDims> {
    let m = graph.matrix()?;
    let split = SplitChoice::trivial(m.size());
    let table = root_multiplicities(&m, &split, pool, cutoff, Method::Oracle)?;
    let auto = auto_split(&m)?;
    if !auto.t.is_empty() && validate_split(&m, &auto)?.is_empty() {
        let check = root_multiplicities(&m, &auto, pool, cutoff, Method::Theorem)?;
        if check.multiplicities != table.multiplicities {
            return Err(Error::Internal(
                "free partially commutative cross-check disagrees with the oracle".into(),
            ));
        }
    }
    Ok(table.multiplicities)
}

/// The on-disk matrix file: entries as rational strings, split optional,
/// indices 0-based.
#[derive(Debug, Serialize, Deserialize)]
pub struct MatrixFile {
    pub matrix: Vec<Vec<Rational>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub split: Option<SplitChoice>,
}

impl MatrixFile {
    pub fn to_matrix(&self) -> Result<BorcherdsCartanMatrix> {
        BorcherdsCartanMatrix::new(self.matrix.clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lyndon::MultiDegree;

    fn md(counts: &[u32]) -> MultiDegree {
        MultiDegree::new(counts.to_vec())
    }

    fn sl3() -> BorcherdsCartanMatrix {
        BorcherdsCartanMatrix::from_ints(&[&[2, -1], &[-1, 2]])
    }

    fn rank2_borcherds() -> BorcherdsCartanMatrix {
        BorcherdsCartanMatrix::from_ints(&[&[2, -1], &[-1, 0]])
    }

    #[test]
    fn matrix_validation() {
        assert!(validate_matrix(&sl3()).is_empty());
        assert!(validate_matrix(&rank2_borcherds()).is_empty());
        let bad = BorcherdsCartanMatrix::from_ints(&[&[2, -1], &[0, 2]]);
        let diags = validate_matrix(&bad);
        assert!(diags.iter().any(|d| d.contains("zero symmetry")), "{diags:?}");
        let positive_off = BorcherdsCartanMatrix::from_ints(&[&[2, 1], &[1, 2]]);
        assert!(!validate_matrix(&positive_off).is_empty());
        let non_integral = BorcherdsCartanMatrix::new(vec![
            vec![Rational::from_int(2), Rational::new(-1, 3)],
            vec![Rational::new(-1, 3), Rational::from_int(-1)],
        ])
        .unwrap();
        let diags = validate_matrix(&non_integral);
        assert!(diags.iter().any(|d| d.contains("nonpositive integer")), "{diags:?}");
    }

    #[test]
    fn non_symmetrizable_triangle_is_flagged() {
        // d_1 a_12 = d_2 a_21 etc. has no consistent positive solution here
        let m = BorcherdsCartanMatrix::from_ints(&[
            &[-1, -1, -2],
            &[-1, -1, -1],
            &[-1, -1, -1],
        ]);
        let diags = validate_matrix(&m);
        assert!(diags.iter().any(|d| d.contains("not symmetrizable")), "{diags:?}");
    }

    #[test]
    fn serre_relations_sl3() {
        let r = serre_relation_set(&sl3()).unwrap();
        assert_eq!(r.exponent(0, 1), Some(2));
        assert_eq!(r.exponent(1, 0), Some(2));
        assert_eq!(r.len(), 2);
    }

    #[test]
    fn serre_relations_borcherds_rank2() {
        let r = serre_relation_set(&rank2_borcherds()).unwrap();
        assert_eq!(r.exponent(0, 1), Some(2));
        assert_eq!(r.exponent(1, 0), None); // imaginary row, a_10 != 0
        assert_eq!(r.len(), 1);
    }

    #[test]
    fn serre_relations_orthogonal_imaginary_pair() {
        let m = BorcherdsCartanMatrix::from_ints(&[&[-2, 0], &[0, -2]]);
        let r = serre_relation_set(&m).unwrap();
        assert_eq!(r.exponent(0, 1), Some(1));
        assert_eq!(r.exponent(1, 0), Some(1));
    }

    #[test]
    fn split_validation() {
        // sl3 with T = {1}: the (1,0) relation has exponent 2
        let v = validate_split(&sl3(), &SplitChoice::new(vec![0], vec![1])).unwrap();
        assert!(!v.is_empty());
        assert!(v[0].contains("exponent 2"), "{v:?}");

        // rank-2 Borcherds with T = {1}: fine, no relation leaves T
        let v = validate_split(&rank2_borcherds(), &SplitChoice::new(vec![0], vec![1])).unwrap();
        assert!(v.is_empty(), "{v:?}");

        // trivial split is always fine
        let v = validate_split(&sl3(), &SplitChoice::trivial(2)).unwrap();
        assert!(v.is_empty());
    }

    #[test]
    fn auto_split_choices() {
        assert_eq!(auto_split(&sl3()).unwrap(), SplitChoice::trivial(2));
        assert_eq!(
            auto_split(&rank2_borcherds()).unwrap(),
            SplitChoice::new(vec![0], vec![1])
        );
        let orth = BorcherdsCartanMatrix::from_ints(&[&[-2, 0], &[0, -2]]);
        // 0 enters T; 1 cannot join because (0,1) is a relation
        assert_eq!(auto_split(&orth).unwrap(), SplitChoice::new(vec![1], vec![0]));
    }

    #[test]
    fn nilpotent_presentation_rank2() {
        let np = build_nilpotent_presentation(
            &rank2_borcherds(),
            &SplitChoice::new(vec![0], vec![1]),
        )
        .unwrap();
        assert_eq!(np.input.compiled.v_count, 1);
        assert_eq!(np.input.compiled.w_count, 1);
        assert_eq!(np.input.a_relations().count(), 0);
        let b: Vec<_> = np.input.b_relations().collect();
        assert_eq!(b.len(), 1);
        assert_eq!(b[0].degree, md(&[2, 1]));
    }

    #[test]
    fn folded_relations_are_deduplicated() {
        let orth = BorcherdsCartanMatrix::from_ints(&[&[-2, 0], &[0, -2]]);
        let np = build_nilpotent_presentation(&orth, &SplitChoice::new(vec![0], vec![1]))
            .unwrap();
        // (0,1) gives [x1,x2] in B; (1,0) folds onto the same element
        assert_eq!(np.input.b_relations().count(), 1);
        let np = build_nilpotent_presentation(&orth, &SplitChoice::new(vec![1], vec![0]))
            .unwrap();
        assert_eq!(np.input.b_relations().count(), 1);
    }

    #[test]
    fn sl3_multiplicities() {
        let mut pool = ContextPool::new();
        let table = root_multiplicities(
            &sl3(),
            &SplitChoice::trivial(2),
            &mut pool,
            5,
            Method::Both,
        )
        .unwrap();
        assert!(table.mismatches.is_empty());
        let entries: Vec<_> = table.multiplicities.iter().collect();
        assert_eq!(
            entries,
            vec![(&md(&[0, 1]), 1), (&md(&[1, 0]), 1), (&md(&[1, 1]), 1)]
        );
        assert_eq!(table.cartan_rank, 2);
    }

    #[test]
    fn borcherds_rank2_split_agreement() {
        let m = rank2_borcherds();
        let mut pool = ContextPool::new();
        let table = root_multiplicities(
            &m,
            &SplitChoice::new(vec![0], vec![1]),
            &mut pool,
            6,
            Method::Both,
        )
        .unwrap();
        assert!(table.mismatches.is_empty(), "{:?}", table.mismatches);
        assert_eq!(table.multiplicities.get(&md(&[1, 2])), 1);
        assert_eq!(table.multiplicities.get(&md(&[2, 2])), 0);
        assert_eq!(table.multiplicities.get(&md(&[0, 2])), 0);
        assert_eq!(table.multiplicities.get(&md(&[1, 0])), 1);
        assert_eq!(table.multiplicities.get(&md(&[0, 1])), 1);

        // split independence: the trivial split gives the same table
        let trivial = root_multiplicities(
            &m,
            &SplitChoice::trivial(2),
            &mut pool,
            6,
            Method::Theorem,
        )
        .unwrap();
        assert_eq!(trivial.multiplicities, table.multiplicities);
    }

    #[test]
    fn slot_permutation_maps_back_to_index_order() {
        // with T = {0}, slot 0 is x2 and slot 1 is x1; the table must
        // nevertheless be indexed in file order
        let orth = BorcherdsCartanMatrix::from_ints(&[&[-2, 0], &[0, -2]]);
        let mut pool = ContextPool::new();
        let table = root_multiplicities(
            &orth,
            &SplitChoice::new(vec![1], vec![0]),
            &mut pool,
            4,
            Method::Both,
        )
        .unwrap();
        assert!(table.mismatches.is_empty(), "{:?}", table.mismatches);
        assert_eq!(table.multiplicities.get(&md(&[1, 0])), 1);
        assert_eq!(table.multiplicities.get(&md(&[0, 1])), 1);
        assert_eq!(table.multiplicities.get(&md(&[1, 1])), 0);
    }

    #[test]
    fn simple_root_multiplicities_are_one() {
        for m in [sl3(), rank2_borcherds()] {
            let mut pool = ContextPool::new();
            let table =
                root_multiplicities(&m, &SplitChoice::trivial(2), &mut pool, 4, Method::Oracle)
                    .unwrap();
            for i in 0..2 {
                assert_eq!(table.multiplicities.get(&MultiDegree::unit(2, i)), 1);
            }
            // k e_i vanishes for k >= 2 in both the real and imaginary case
            assert_eq!(table.multiplicities.get(&md(&[2, 0])), 0);
            assert_eq!(table.multiplicities.get(&md(&[0, 2])), 0);
        }
    }

    #[test]
    fn fpc_edgeless_graph_is_free() {
        let graph = CommutationGraph { vertices: 2, commuting_pairs: vec![] };
        let mut pool = ContextPool::new();
        let dims = fpc_dims(&graph, &mut pool, 5).unwrap();
        assert_eq!(dims, crate::series::free_lie_dims(2, 5));
    }

    #[test]
    fn fpc_complete_graph_is_abelian() {
        let graph = CommutationGraph { vertices: 2, commuting_pairs: vec![(0, 1)] };
        let mut pool = ContextPool::new();
        let dims = fpc_dims(&graph, &mut pool, 5).unwrap();
        assert_eq!(dims.get(&md(&[1, 0])), 1);
        assert_eq!(dims.get(&md(&[0, 1])), 1);
        let total: u64 = dims.iter().map(|(_, d)| d).sum();
        assert_eq!(total, 2);
    }

    #[test]
    fn fpc_single_commuting_pair_on_three_vertices() {
        let graph = CommutationGraph { vertices: 3, commuting_pairs: vec![(0, 1)] };
        let mut pool = ContextPool::new();
        let dims = fpc_dims(&graph, &mut pool, 5).unwrap();
        // degree 2: three brackets minus the commuting pair
        assert_eq!(dims.total_at(2), 2);
    }

    #[test]
    fn fpc_rejects_bad_graphs() {
        let loopy = CommutationGraph { vertices: 2, commuting_pairs: vec![(1, 1)] };
        assert!(loopy.validate().is_err());
        let oob = CommutationGraph { vertices: 2, commuting_pairs: vec![(0, 5)] };
        assert!(oob.validate().is_err());
    }

    #[test]
    fn matrix_file_parsing() {
        let json = r#"{"matrix": [["2","-1"],["-1","0"]], "split": {"S": [0], "T": [1]}}"#;
        let f: MatrixFile = serde_json::from_str(json).unwrap();
        assert_eq!(f.to_matrix().unwrap(), rank2_borcherds());
        assert_eq!(f.split, Some(SplitChoice::new(vec![0], vec![1])));
        let json = r#"{"matrix": [["2"]]}"#;
        let f: MatrixFile = serde_json::from_str(json).unwrap();
        assert!(f.split.is_none());
    }
}
