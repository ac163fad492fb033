//! Shared fixtures for the benchmark targets.

use liedim::gkm::BorcherdsCartanMatrix;
use liedim::presentation::{GeneratorDecl, Presentation, RelationExpr};

pub fn sl3_presentation() -> Presentation {
    Presentation {
        generators: vec![GeneratorDecl::v("e1"), GeneratorDecl::v("e2")],
        relations: vec![
            RelationExpr::adpow("e1", 2, RelationExpr::gen("e2")),
            RelationExpr::adpow("e2", 2, RelationExpr::gen("e1")),
        ],
    }
}

pub fn sl2_half_presentation() -> Presentation {
    Presentation {
        generators: vec![GeneratorDecl::v("a"), GeneratorDecl::w("b")],
        relations: vec![RelationExpr::adpow("a", 2, RelationExpr::gen("b"))],
    }
}

pub fn rank2_borcherds() -> BorcherdsCartanMatrix {
    BorcherdsCartanMatrix::from_ints(&[&[2, -1], &[-1, 0]])
}
