//! Exact computation with unimodular rows over explicit commutative rings.
//!
//! Rings are built from a small JSON description language ([`RingDescriptor`]).
//! Rows, elementary words and their certificates live in [`row`] and [`word`];
//! orbit searches in [`orbit`]; the orbit product and group tables in [`vdk`].
//! Relative orbits through the excision ring are in [`relative`], polynomial
//! extensions and the Jacobson radical in [`polyext`], Mennicke symbols in
//! [`mennicke`].
//!
//! ```
//! use umrow::Ring;
//! use umrow::orbit::{same_orbit, OrbitConfig};
//!
//! let r = Ring::parse_descriptor("Z/6").unwrap();
//! let v = r.parse_row("5,2,3").unwrap();
//! let e1 = r.parse_row("1,0,0").unwrap();
//! let word = same_orbit(&r, &v, &e1, &OrbitConfig::default()).unwrap();
//! assert_eq!(word.word().unwrap().act(&v).unwrap(), e1);
//! ```

pub mod error;
pub mod matrix;
pub mod mennicke;
pub mod orbit;
pub mod polyext;
pub mod relative;
pub mod ring;
pub mod row;
pub mod symplectic;
pub mod vdk;
pub mod word;

mod linsolve;

#[cfg(doctest)]
mod book;

pub use error::{Error, Result};
pub use ring::{Elem, Ideal, Ring, RingDescriptor, RingElement};
