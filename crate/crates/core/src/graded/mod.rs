//! Graded bases, sparse vectors, structure-constant tensors, even maps and
//! the algebra, bimodule and representation objects built from them.

mod basis;
mod map;
mod object;
mod op;
mod vector;

pub use basis::{BasisEntry, GradedBasis, GradedElement};
pub use map::{map_check_even, EvenLinearMap, LinearMap};
pub use object::{
    grading_check, BimoduleObject, GradedAlgebraObject, RepKind, RepresentationObject, ACTION_NAMES, OP_NAMES,
};
pub use op::{op_apply, MultilinearOp, OpOutput, OpValue};
pub use vector::Vector;
