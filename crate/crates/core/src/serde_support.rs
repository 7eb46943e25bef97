//! Big numbers serialize as decimal strings so JSON consumers never round them.

use num_bigint::BigInt;
use serde::Serializer;

use crate::algebra::{fmt_rational, BigRational};

pub fn rational<S: Serializer>(v: &BigRational, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&fmt_rational(v))
}

pub fn rational_vec<S: Serializer>(v: &[BigRational], s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(fmt_rational))
}

pub fn rational_rows<S: Serializer>(v: &[Vec<BigRational>], s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(|row| row.iter().map(fmt_rational).collect::<Vec<_>>()))
}

pub fn bigint<S: Serializer>(v: &BigInt, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

pub fn bigint_vec<S: Serializer>(v: &[BigInt], s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(ToString::to_string))
}
