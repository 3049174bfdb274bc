//! Vertex-splitting constructions on good drawings and the three
//! `K_{1,1,m,n}` lower-bound pipelines built from them.
//!
//! Every construction is carried out on an actual drawing, and every
//! crossing-count identity used by the arguments is measured on the result
//! and compared with its closed-form prediction. A pipeline returns a
//! [`PipelineCertificate`] listing those comparisons, digests of the
//! drawings involved and the lower bound the argument yields.

mod certificate;
mod context;
mod error;
mod lemma1;
mod theorems;

pub use certificate::{
    drawing_digest, Alias, BoundStatement, Check, Equality, Instance, NamedDigest, PipelineCertificate,
};
pub use context::{part_unions, Lemma1Context};
pub use error::LemmaError;
pub use lemma1::{lemma1_d1, lemma1_d2, split_graph, split_twin_graph};
pub use theorems::{lemma3_check, thm1_pipeline, thm2_pipeline, thm3_pipeline, Lemma3Report};
