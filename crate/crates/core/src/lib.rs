//! Exact computer algebra over prime fields: Groebner bases under global
//! orders, Mora weak normal forms and standard bases under the negative
//! degree lexicographic order, and the binomial ideals of linear codes.

pub mod buchberger;
pub mod code;
pub mod division;
pub mod error;
pub mod expr;
pub mod field;
pub mod monomial;
pub mod mora;
pub mod poly;

pub use buchberger::{groebner, product_criterion, reduce_basis, reduced_groebner, CompletionOptions};
pub use code::{ClosedFormReport, GeneratorMatrix, MatrixError, MiVector};
pub use division::{divide, Division};
pub use error::{Error, Result};
pub use expr::{parse_poly, print_poly, ParseError};
pub use field::{binom_mod_p, FieldElement, PrimeField};
pub use monomial::{Monomial, MonomialOrder};
pub use mora::{is_standard_basis, standard_basis, weak_normal_form, StandardBasisFailure, WeakNormalForm};
pub use poly::{Polynomial, Ring, Term};
