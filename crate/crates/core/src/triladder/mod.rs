//! Splicing, tri-ladders, nontrivial 3-cuts and 3-cut decompositions of
//! cubic graphs.

mod cuts;
mod decompose;
mod generate;
mod recognize;
mod splice;

pub use cuts::{classify_3cut, nontrivial_3cuts, ThreeCutCertificate, ThreeCutKind, ThreeCutVerdict};
pub use decompose::{k4_decomposition, three_cut_decomposition, DecompositionTree};
pub use generate::{
    generate_triladders, generate_triladders_any_triangle, trace_ridges, Rung, SpliceRecord,
    TriLadderBlueprint, MAX_GENERATED_VERTICES,
};
pub use recognize::{is_triladder, ranks_increase_along_ridges, triladder_structure, TriLadderStructure};
pub use splice::{all_bijections, splice, Splice};
