//! Golden values transcribed by hand from published tables and worked
//! examples. Each carries the citation of the display it was copied from.

/// Expansion of one `Δ_n(a)` in the text syntax of
/// [`crate::SuperPolynomial::parse`] (`t{i}` is `θ_i`).
pub struct Expansion {
    pub n: usize,
    pub a: &'static [u32],
    pub citation: &'static str,
    pub text: &'static str,
}

pub const EXPANSIONS: &[Expansion] = &[
    Expansion {
        n: 3,
        a: &[1, 1],
        citation: "worked expansion of Δ_3(1,1)",
        text: "2*x1*x2*t{1}*t{2} - 2*x1*x3*t{1}*t{3} + 2*x2*x3*t{2}*t{3}",
    },
    Expansion {
        n: 3,
        a: &[2, 0],
        citation: "worked expansion of Δ_3(2,0)",
        text: "x1^2*t{1}*t{2} + x2^2*t{1}*t{2} - x1^2*t{1}*t{3} - x3^2*t{1}*t{3} + x2^2*t{2}*t{3} + x3^2*t{2}*t{3}",
    },
    Expansion {
        n: 3,
        a: &[1],
        citation: "worked expansion of Δ_3(1)",
        text: "x1*x2*t{1} - x1*x2*t{2} - x1*x3*t{1} - x2*x3*t{3} + x2*x3*t{2} + x1*x3*t{3}",
    },
];

/// A bigraded Frobenius image shown as a matrix of Schur expansions: row `j`
/// is the θ-degree, column `i` the x-degree.
pub struct SchurTable {
    pub n: usize,
    pub a: &'static [u32],
    pub citation: &'static str,
    pub rows: &'static [&'static [&'static str]],
}

pub const SCHUR_TABLES: &[SchurTable] = &[
    SchurTable {
        n: 3,
        a: &[1],
        citation: "matrix of grFrob(W_3(1); q, z) in the duality discussion",
        rows: &[&["s_3", "s_3 + s_21", "s_21"], &["s_21", "s_21 + s_111", "s_111"]],
    },
    SchurTable {
        n: 4,
        a: &[1, 1],
        citation: "matrix of grFrob(W_4(1,1); q, z) in the duality discussion",
        rows: &[
            &["s_4", "s_4 + s_31", "s_4 + s_31 + s_22", "s_31"],
            &["s_31", "2*s_31 + s_22 + s_211", "s_31 + s_22 + 2*s_211", "s_211"],
            &["s_211", "s_22 + s_211 + s_1111", "s_211 + s_1111", "s_1111"],
        ],
    },
    SchurTable {
        n: 4,
        a: &[2, 1],
        citation: "matrix of grFrob(W_4(2,1); q, z) in the duality discussion",
        rows: &[
            &["s_4", "s_4 + s_31", "s_4 + 2*s_31 + s_22", "s_4 + 2*s_31 + s_22 + s_211", "s_31 + s_211"],
            &[
                "s_4 + s_31",
                "s_4 + 3*s_31 + s_22 + s_211",
                "3*s_31 + 3*s_22 + 3*s_211",
                "s_31 + s_22 + 3*s_211 + s_1111",
                "s_211 + s_1111",
            ],
            &["s_31 + s_211", "s_31 + s_22 + 2*s_211 + s_1111", "s_22 + 2*s_211 + s_1111", "s_211 + s_1111", "s_1111"],
        ],
    },
];

/// A bigraded Hilbert series as an integer matrix, rows θ-degree, columns
/// x-degree.
pub struct HilbertTable {
    pub n: usize,
    pub a: &'static [u32],
    pub citation: &'static str,
    pub rows: &'static [&'static [u64]],
}

pub const HILBERT_TABLES: &[HilbertTable] = &[HilbertTable {
    n: 5,
    a: &[2, 2],
    citation: "Hilbert matrix of R_5(2,2) preceding the unimodality conjecture",
    rows: &[&[1, 5, 15, 29, 39, 35, 20, 6], &[4, 19, 50, 77, 77, 50, 19, 4], &[6, 20, 35, 39, 29, 15, 5, 1]],
}];

/// The three identities `ω grFrob(V^=_4(a); q) ∝ Q'_λ` listed before the
/// Tanisaki conjecture, as `(a, λ)`.
pub const TANISAKI_N4: &[(&[u32], &[u32])] = &[(&[0, 0], &[3, 1]), (&[1, 0], &[3, 1]), (&[1, 1], &[2, 2])];
