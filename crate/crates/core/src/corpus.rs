//! Bundled example algebras.
//!
//! | name      | description                                                   |
//! |-----------|---------------------------------------------------------------|
//! | `a0`      | two-dimensional abelian algebra                               |
//! | `sl2`     | `sl(2)` with `phi = id`                                       |
//! | `sl2c`    | Yau twist of `sl2` by `diag(1, 2, 1/2)`                       |
//! | `lb2`     | two-dimensional Leibniz algebra `[e2, e2] = e1`               |
//! | `sl2v1`   | `sl2` with the two-dimensional module as a left-null ideal    |
//! | `d6`      | `sl2 + sl2`                                                   |
//! | `nml`     | `sl2v1` plus a second copy of the module with the Lie action  |
//! | `split_j` | `d6` with one left-null module over each copy                 |

use crate::algebra::HomAlgebra;
use crate::error::{Error, Result};
use crate::io::parse_algebra_str;
use crate::linalg::Vector;

const FILES: &[(&str, &str)] = &[
    ("a0", include_str!("../corpus/a0.json")),
    ("sl2", include_str!("../corpus/sl2.json")),
    ("sl2c", include_str!("../corpus/sl2c.json")),
    ("lb2", include_str!("../corpus/lb2.json")),
    ("sl2v1", include_str!("../corpus/sl2v1.json")),
    ("d6", include_str!("../corpus/d6.json")),
    ("nml", include_str!("../corpus/nml.json")),
    ("split_j", include_str!("../corpus/split_j.json")),
];

pub fn names() -> impl Iterator<Item = &'static str> {
    FILES.iter().map(|(n, _)| *n)
}

pub fn source(name: &str) -> Option<&'static str> {
    FILES.iter().find(|(n, _)| *n == name).map(|(_, s)| *s)
}

pub fn load(name: &str) -> Result<(HomAlgebra, Vec<Vector>)> {
    let text = source(name).ok_or_else(|| Error::Io(format!("no corpus algebra named {name:?}")))?;
    parse_algebra_str(text, &format!("{name}.json"))
}

fn builtin(name: &str) -> HomAlgebra {
    load(name).expect("bundled corpus files parse").0
}

pub fn a0() -> HomAlgebra {
    builtin("a0")
}

pub fn sl2() -> HomAlgebra {
    builtin("sl2")
}

pub fn sl2c() -> HomAlgebra {
    builtin("sl2c")
}

pub fn lb2() -> HomAlgebra {
    builtin("lb2")
}

pub fn sl2v1() -> HomAlgebra {
    builtin("sl2v1")
}

pub fn d6() -> HomAlgebra {
    builtin("d6")
}

pub fn nml() -> HomAlgebra {
    builtin("nml")
}

pub fn split_j() -> HomAlgebra {
    builtin("split_j")
}
