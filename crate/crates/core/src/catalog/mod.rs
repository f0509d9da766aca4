//! Concrete models of the classical matrix superalgebras, the strange
//! families, the one-parameter family osp(4|2;α), the Cartan vector-field
//! families, their outer-derivation generators, and root/diagram data.

pub mod cartan;
pub mod depthone;
pub mod gamma;
pub mod matrixfam;
pub mod outer;
pub mod roots;

pub use cartan::CartanModel;
pub use depthone::{cartan_depth_one, psq_depth_one, spe_depth_one, three_piece_algebra, SpeRow};
pub use gamma::osp4_2_alpha;
pub use matrixfam::{gl, osp, pe, pq, psl, psq, q, sl, spe, sq, Realization};
pub use outer::{der_algebra, restricted_ad, OuterGen};
pub use roots::{Dynkin, NodeColor, RootData};
