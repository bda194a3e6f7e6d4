//! Per-member data for the clique family `C_K`.

use alloc::vec::Vec;

use crate::complex::{FullSubcomplex, Neighbourliness, SimplicialComplex, VertexSubset};
use crate::homology::{FaceTable, HomologyProfile};

/// One `K_I ∈ C_K` with the invariants the decision rules consume.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Member {
    pub subset: VertexSubset,
    pub complex: FullSubcomplex,
    pub dimension: usize,
    pub neighbourliness: Neighbourliness,
    pub homology: HomologyProfile,
}

impl Member {
    pub fn size(&self) -> usize {
        self.subset.len()
    }

    pub fn is_simplex(&self) -> bool {
        self.neighbourliness.is_simplex
    }
}

/// Every member of `C_K`, in size-then-lexicographic order.
pub fn survey(complex: &SimplicialComplex) -> Vec<Member> {
    let table = FaceTable::new(complex);
    complex
        .enumerate_ck()
        .into_iter()
        .map(|subset| {
            let sub = complex.full_subcomplex(subset).expect("cliques are nonempty subsets");
            Member {
                subset,
                dimension: sub.complex.dimension(),
                neighbourliness: sub.complex.neighbourliness(),
                homology: table.homology_of(subset),
                complex: sub,
            }
        })
        .collect()
}
