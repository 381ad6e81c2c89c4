//! Exact computation of lower bounds for the number of real self-dual spaces
//! in osculating Schubert problems.
//!
//! An `N`-dimensional space of polynomials is self-dual when it coincides,
//! up to multiplication by a polynomial, with the space spanned by the
//! Wronskians of its `(N-1)`-element subsets. Counting real self-dual
//! spaces with prescribed ramification reduces to character computations
//! for the Lie algebra `g_N`, which is `so_{2r+1}` for `N = 2r`, `sp_{2r}`
//! for `N = 2r + 1` with `r >= 2`, and `sl_2` for `N = 3`. The lower bound
//! itself is the absolute value of a single coefficient in a product of
//! characters, read off against the Weyl denominator.
//!
//! The crate is organized in four layers:
//!
//! * [`laurent`] — sparse Laurent polynomials in `r` variables over
//!   arbitrary-precision integers, with exact division; the computational
//!   substrate for every character formula.
//! * [`lie`] — bookkeeping for `g_N`: weights in fundamental coordinates,
//!   bar-partitions, the translation between `g_N`-weights and partitions
//!   with at most `N` parts, and Grassmannian dimension accounting.
//! * [`characters`] — the Weyl denominator of `g_N`, characters of
//!   irreducible modules as Laurent polynomials, character values of
//!   symmetric-group elements on multiplicity spaces, and two independent
//!   verification oracles (the Weyl dimension formula and the Freudenthal
//!   recursion).
//! * [`bounds`] — signatures of conjugation-twisted invariant forms,
//!   the resulting lower bounds, enumeration of conjugate-pair classes,
//!   and reproduction of the two reference tables shipped with the crate.
//!
//! All arithmetic is exact; there are no floating-point numbers anywhere.

pub mod bounds;
pub mod characters;
pub mod laurent;
pub mod lie;
