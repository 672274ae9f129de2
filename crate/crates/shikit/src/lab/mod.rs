//! Closed-form counts, statistic polynomials and the verification suites.

pub mod counts;
mod qpoly;
mod skmk;
mod verify;

pub use counts::{
    binomial, census_class_a, census_class_c, census_type_a, census_type_c, class_size_a,
    class_size_c, class_size_co_a, class_size_co_c, identity_term_a, identity_term_c,
    kreweras_count, multinomial, type_count_c,
};
pub use qpoly::{gf_statistic, scaled_full_sequence_poly_a, Mode, QPolynomial, Statistic};
pub use skmk::{class_tables_a, class_tables_c, sk_mk_a, sk_mk_c, CoKey, SkMk};
pub use verify::{verify, Check, Suite, VerificationReport};
