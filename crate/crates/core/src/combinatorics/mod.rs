//! Partitions, multipartitions and the integer/rational combinatorics built
//! on them.

mod multipartition;
mod partition;
mod symbol;

pub use multipartition::{enumerate_multipartitions, Multipartition};
pub use partition::{generalized_hook, partitions_of, Partition};
pub(crate) use partition::gen_hook_unchecked;
pub use symbol::{
    a_value_combinatorial, a_value_combinatorial_with_size, a_value_hook_formula, auto_symbol_size,
    dominance, kappa, multiset_dominates, shifted_symbol, ChargeData, KappaSequence, ShiftedSymbol,
};
