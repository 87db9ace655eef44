//! Runs the guide's code blocks as doctests.

macro_rules! chapters {
    ($($name:ident => $file:literal),* $(,)?) => {
        $(
            #[doc = include_str!(concat!("../../../book/src/", $file))]
            pub struct $name;
        )*
    };
}

chapters! {
    Introduction => "introduction.md",
    Rings => "rings.md",
    RowsAndWords => "rows-and-words.md",
    Orbits => "orbits.md",
    Symplectic => "symplectic.md",
    Product => "product.md",
    Relative => "relative.md",
    Polynomials => "polynomials.md",
    Mennicke => "mennicke.md",
    Cli => "cli.md",
}

#[doc = include_str!("../../../README.md")]
pub struct Readme;
