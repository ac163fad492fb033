//! Iterating the split decomposition must agree with a single-shot split:
//! eliminating T1 and then a further T2 inside the remaining S1 yields the
//! same multiplicity table as eliminating T1 u T2 at once, and the same as
//! replacing the within-S1 dimensions by their own decomposition's output.

use liedim::elimination::{self, predict_quotient};
use liedim::freelie::ContextPool;
use liedim::gkm::{build_nilpotent_presentation, root_multiplicities, BorcherdsCartanMatrix, Method, SplitChoice};
use liedim::series::GradedDims;

/// One real row tied to two mutually non-orthogonal imaginary rows: indices
/// 1 and 2 are both eligible for T, separately or together.
fn rank3_matrix() -> BorcherdsCartanMatrix {
    BorcherdsCartanMatrix::from_ints(&[&[2, -1, -1], &[-1, 0, -1], &[-1, -1, 0]])
}

#[test]
fn single_shot_split_matches_oracle() {
    let m = rank3_matrix();
    let mut pool = ContextPool::new();
    let table = root_multiplicities(
        &m,
        &SplitChoice::new(vec![0], vec![1, 2]),
        &mut pool,
        5,
        Method::Both,
    )
    .unwrap();
    assert!(table.mismatches.is_empty(), "{:?}", table.mismatches);
}

#[test]
fn iterated_split_matches_single_shot() {
    let m = rank3_matrix();
    let height = 5;
    let mut pool = ContextPool::new();

    let single_shot = root_multiplicities(
        &m,
        &SplitChoice::new(vec![0], vec![1, 2]),
        &mut pool,
        height,
        Method::Theorem,
    )
    .unwrap()
    .multiplicities;

    // step 1: eliminate T1 = {2}, leaving S1 = {0, 1}
    let np = build_nilpotent_presentation(&m, &SplitChoice::new(vec![0, 1], vec![2])).unwrap();
    assert_eq!(np.slot_to_index, vec![0, 1, 2]);
    let report = elimination::run(&np.input, &mut pool, height, false).unwrap();

    // step 2: the subalgebra on S1 is presented by the submatrix; compute
    // its dimensions by a further elimination with T2 = {1} and substitute
    // them for the g-part
    let sub = BorcherdsCartanMatrix::from_ints(&[&[2, -1], &[-1, 0]]);
    let sub_table = root_multiplicities(
        &sub,
        &SplitChoice::new(vec![0], vec![1]),
        &mut pool,
        height,
        Method::Theorem,
    )
    .unwrap()
    .multiplicities;
    let mut g_iterated = GradedDims::new(3, height);
    for (alpha, d) in sub_table.iter() {
        let mut counts = alpha.counts().to_vec();
        counts.push(0);
        g_iterated.set(liedim::MultiDegree::new(counts), d);
    }
    assert_eq!(g_iterated, report.g_dims, "sub-decomposition must reproduce the S1 dims");

    let iterated = predict_quotient(&g_iterated, &report.n_dims, 2, height).unwrap();
    assert_eq!(iterated, single_shot);
    assert_eq!(iterated, report.predicted);
}
