//! Derived categorical structure: identities and functor actions as term
//! constructions, the generating coherence maps, the representability
//! bijections, and the machine-checked coherence suite.

pub mod maps;
pub mod represent;
pub mod suite;

pub use maps::{coherence_map, MapError, MapName, MsgMap, ProcMap};
pub use represent::{
    adjunction_transpose, adjunction_untranspose, cotuple_decompose, cotuple_recompose,
    represent_co, represent_contra, unrepresent_co, unrepresent_contra, Cotuple, Unrepresented,
};
pub use suite::{catalogue, coherence_suite, CoherenceCase, CoherenceReport, Verdict};
