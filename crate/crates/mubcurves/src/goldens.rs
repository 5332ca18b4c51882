//! Frozen reference fixtures for the two-qubit arrangements and regression
//! constants for the larger fields.
//!
//! Operator lists are unordered fixtures: comparisons should sort both sides.
//! Element names follow the two-qubit display convention 0, 1, s, s2.

/// One row of a reference table: the operator class of a curve, its tensor
/// factorization, and whether the eigenbasis factors across the qubit cut.
pub struct GoldenRow {
    pub operators: &'static [&'static str],
    pub tensors: &'static [&'static str],
    pub factorable: bool,
}

pub struct GoldenTable {
    pub label: &'static str,
    pub rows: [GoldenRow; 5],
}

pub const TABLES: [GoldenTable; 6] = [
    GoldenTable {
        label: "table1",
        rows: [
            GoldenRow {
                operators: &["Z(s)", "Z(s2)", "Z(1)"],
                tensors: &["sz@1", "1@sz", "sz@sz"],
                factorable: true,
            },
            GoldenRow {
                operators: &["Z(s)X(s)", "Z(s2)X(s2)", "Z(1)X(1)"],
                tensors: &["sy@1", "1@sy", "sy@sy"],
                factorable: true,
            },
            GoldenRow {
                operators: &["Z(s)X(s2)", "Z(s2)X(1)", "Z(1)X(s)"],
                tensors: &["sz@sx", "sx@sy", "sy@sz"],
                factorable: false,
            },
            GoldenRow {
                operators: &["Z(s)X(1)", "Z(s2)X(s)", "Z(1)X(s2)"],
                tensors: &["sy@sx", "sx@sz", "sz@sy"],
                factorable: false,
            },
            GoldenRow {
                operators: &["X(s)", "X(s2)", "X(1)"],
                tensors: &["sx@1", "1@sx", "sx@sx"],
                factorable: true,
            },
        ],
    },
    GoldenTable {
        label: "table2",
        rows: [
            GoldenRow {
                operators: &["Z(s2)X(s)", "Z(1)X(1)", "Z(s)X(s2)"],
                tensors: &["sx@sz", "sy@sy", "sz@sx"],
                factorable: false,
            },
            GoldenRow {
                operators: &["Z(s2)X(1)", "Z(1)", "Z(s)X(1)"],
                tensors: &["sx@sy", "sz@sz", "sy@sx"],
                factorable: false,
            },
            GoldenRow {
                operators: &["Z(s2)X(s2)", "Z(1)X(s2)", "Z(s)"],
                tensors: &["1@sy", "sz@sy", "sz@1"],
                factorable: true,
            },
            GoldenRow {
                operators: &["Z(s2)", "Z(1)X(s)", "Z(s)X(s)"],
                tensors: &["1@sz", "sy@sz", "sy@1"],
                factorable: true,
            },
            GoldenRow {
                operators: &["X(s)", "X(s2)", "X(1)"],
                tensors: &["sx@1", "1@sx", "sx@sx"],
                factorable: true,
            },
        ],
    },
    GoldenTable {
        label: "table3",
        rows: [
            GoldenRow {
                operators: &["Z(s)X(s2)", "Z(1)X(1)", "Z(s2)X(s)"],
                tensors: &["sz@sx", "sy@sy", "sx@sz"],
                factorable: false,
            },
            GoldenRow {
                operators: &["Z(1)X(s2)", "X(1)", "Z(1)X(s)"],
                tensors: &["sz@sy", "sx@sx", "sy@sz"],
                factorable: false,
            },
            GoldenRow {
                operators: &["Z(s2)X(s2)", "Z(s2)X(1)", "X(s)"],
                tensors: &["1@sy", "sx@sy", "sx@1"],
                factorable: true,
            },
            GoldenRow {
                operators: &["X(s2)", "Z(s)X(1)", "Z(s)X(s)"],
                tensors: &["1@sx", "sy@sx", "sy@1"],
                factorable: true,
            },
            GoldenRow {
                operators: &["Z(s)", "Z(s2)", "Z(1)"],
                tensors: &["sz@1", "1@sz", "sz@sz"],
                factorable: true,
            },
        ],
    },
    GoldenTable {
        label: "table4",
        rows: [
            GoldenRow {
                operators: &["X(1)", "Z(1)", "Z(1)X(1)"],
                tensors: &["sx@sx", "sz@sz", "sy@sy"],
                factorable: false,
            },
            GoldenRow {
                operators: &["X(s)", "Z(s2)", "Z(s2)X(s)"],
                tensors: &["sx@1", "1@sz", "sx@sz"],
                factorable: true,
            },
            GoldenRow {
                operators: &["Z(s2)X(s2)", "Z(1)X(s2)", "Z(s)"],
                tensors: &["1@sy", "sz@sy", "sz@1"],
                factorable: true,
            },
            GoldenRow {
                operators: &["X(s2)", "Z(s)X(1)", "Z(s)X(s)"],
                tensors: &["1@sx", "sy@sx", "sy@1"],
                factorable: true,
            },
            GoldenRow {
                operators: &["Z(s)X(s2)", "Z(s2)X(1)", "Z(1)X(s)"],
                tensors: &["sz@sx", "sx@sy", "sy@sz"],
                factorable: false,
            },
        ],
    },
    GoldenTable {
        label: "table5",
        rows: [
            GoldenRow {
                operators: &["X(1)", "Z(1)", "Z(1)X(1)"],
                tensors: &["sx@sx", "sz@sz", "sy@sy"],
                factorable: false,
            },
            GoldenRow {
                operators: &["X(s2)", "Z(s)", "Z(s)X(s2)"],
                tensors: &["1@sx", "sz@1", "sz@sx"],
                factorable: true,
            },
            GoldenRow {
                operators: &["Z(s2)", "Z(1)X(s)", "Z(s)X(s)"],
                tensors: &["1@sz", "sy@sz", "sy@1"],
                factorable: true,
            },
            GoldenRow {
                operators: &["Z(s2)X(s2)", "Z(s2)X(1)", "X(s)"],
                tensors: &["1@sy", "sx@sy", "sx@1"],
                factorable: true,
            },
            GoldenRow {
                operators: &["Z(s)X(1)", "Z(s2)X(s)", "Z(1)X(s2)"],
                tensors: &["sy@sx", "sx@sz", "sz@sy"],
                factorable: false,
            },
        ],
    },
    GoldenTable {
        label: "table6",
        rows: [
            GoldenRow {
                operators: &["X(s2)", "Z(s)", "Z(s)X(s2)"],
                tensors: &["1@sx", "sz@1", "sz@sx"],
                factorable: true,
            },
            GoldenRow {
                operators: &["X(s)", "Z(s2)", "Z(s2)X(s)"],
                tensors: &["sx@1", "1@sz", "sx@sz"],
                factorable: true,
            },
            GoldenRow {
                operators: &["Z(s2)X(1)", "Z(1)", "Z(s)X(1)"],
                tensors: &["sy@sx", "sz@sz", "sx@sy"],
                factorable: false,
            },
            GoldenRow {
                operators: &["Z(1)X(s2)", "X(1)", "Z(1)X(s)"],
                tensors: &["sz@sy", "sx@sx", "sy@sz"],
                factorable: false,
            },
            GoldenRow {
                operators: &["Z(s)X(s)", "Z(s2)X(s2)", "Z(1)X(1)"],
                tensors: &["sy@1", "1@sy", "sy@sy"],
                factorable: true,
            },
        ],
    },
];

/// Per-qubit transformation words carrying the ray arrangement (table1) onto
/// each of the other named arrangements.
pub const TABLE_WORDS: [(&str, &str); 5] = [
    ("table2", "x@1"),
    ("table3", "1@z"),
    ("table4", "y@z"),
    ("table5", "y@x"),
    ("table6", "1@y"),
];

/// A reachability fixture: the target curve named by its structural
/// signature, and a transformation word mapping the family's source curve
/// onto it. Rays carry their slope as parameter, with the vertical axis at
/// the out-of-range value 4.
pub struct CurveReach {
    pub class: &'static str,
    pub param: u16,
    pub word: &'static str,
}

/// Source: the vertical axis. Together with the source itself these are all
/// nine structures with factorable eigenbases.
pub const FACTORABLE_FAMILY: [CurveReach; 8] = [
    CurveReach {
        class: "exceptional",
        param: 3,
        word: "1@y",
    },
    CurveReach {
        class: "exceptional",
        param: 2,
        word: "y@1",
    },
    CurveReach {
        class: "ray",
        param: 0,
        word: "y@y",
    },
    CurveReach {
        class: "ray",
        param: 1,
        word: "z@z",
    },
    CurveReach {
        class: "regular_alpha",
        param: 2,
        word: "y@z",
    },
    CurveReach {
        class: "regular_alpha",
        param: 3,
        word: "z@y",
    },
    CurveReach {
        class: "regular_beta",
        param: 2,
        word: "1@z",
    },
    CurveReach {
        class: "regular_beta",
        param: 3,
        word: "z@1",
    },
];

/// Source: the slope-s ray. Together with the source itself these are all
/// six structures with maximally entangled eigenbases.
pub const ENTANGLED_FAMILY: [CurveReach; 5] = [
    CurveReach {
        class: "exceptional",
        param: 1,
        word: "z@y",
    },
    CurveReach {
        class: "ray",
        param: 3,
        word: "x@x",
    },
    CurveReach {
        class: "regular_alpha",
        param: 0,
        word: "1@x",
    },
    CurveReach {
        class: "regular_alpha",
        param: 1,
        word: "1@y",
    },
    CurveReach {
        class: "regular_beta",
        param: 1,
        word: "y@1",
    },
];

/// Census sizes (total, rays, regular, exceptional) for the one- and
/// two-qubit fields.
pub const GF2_CENSUS: (usize, usize, usize, usize) = (3, 3, 0, 0);
pub const GF4_CENSUS: (usize, usize, usize, usize) = (15, 5, 7, 3);

pub const GF2_BUNDLE_COUNT: usize = 1;
pub const GF4_BUNDLE_COUNT: usize = 6;

/// Three-qubit regression constants, frozen from the first exhaustive run.
/// The census size also has an independent check: commuting curve point sets
/// are the maximal isotropic subspaces of the symplectic six-dimensional
/// binary space, counted by (2 + 1)(4 + 1)(8 + 1).
pub const GF8_CENSUS_TOTAL: usize = 135;
/// Frozen from the first full enumeration; every curve sits in exactly
/// 960 * 9 / 135 = 64 bundles.
pub const GF8_BUNDLE_COUNT: usize = 960;
