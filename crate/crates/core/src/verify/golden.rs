//! Frozen skeleton of the d = 4, n = 2 resolution, divided by δ, in the
//! self-dual bases (B₁ raw, X block of B₂ raw followed by its dual Y block,
//! B₃ dual to B₁).

/// [b̄₁]/δ.
pub const B1: [&str; 9] = ["0", "0", "0", "x2^2", "x2*x3", "x2*x4", "x3^2", "x3*x4", "x4^2"];

/// [b̄₂]/δ, 9 × 16.
pub const B2: [[&str; 16]; 9] = [
    ["x3", "-x2", "0", "0", "0", "x4", "0", "-x2", "0", "0", "0", "0", "0", "0", "0", "0"],
    ["0", "x3", "0", "-x2", "0", "0", "x4", "0", "0", "0", "0", "0", "0", "0", "0", "0"],
    ["0", "0", "x3", "0", "-x2", "0", "0", "x4", "0", "0", "0", "0", "0", "0", "0", "0"],
    ["0", "0", "0", "0", "0", "0", "0", "0", "x4", "0", "0", "0", "0", "-x3", "0", "0"],
    ["0", "0", "0", "0", "0", "0", "0", "0", "0", "x4", "0", "0", "0", "x2", "-x3", "0"],
    ["0", "0", "0", "0", "0", "0", "0", "0", "-x2", "0", "x4", "0", "0", "0", "0", "-x3"],
    ["0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "x4", "0", "0", "x2", "0"],
    ["0", "0", "0", "0", "0", "0", "0", "0", "0", "-x2", "0", "-x3", "x4", "0", "0", "x2"],
    ["0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "-x2", "0", "-x3", "0", "0", "0"],
];

/// [b̄₃]/δ, 16 × 9.
pub const B3: [[&str; 9]; 16] = [
    ["0", "0", "0", "-x4", "0", "x2", "0", "0", "0"],
    ["0", "0", "0", "0", "-x4", "0", "0", "x2", "0"],
    ["0", "0", "0", "0", "0", "-x4", "0", "0", "x2"],
    ["0", "0", "0", "0", "0", "0", "-x4", "x3", "0"],
    ["0", "0", "0", "0", "0", "0", "0", "-x4", "x3"],
    ["0", "0", "0", "x3", "-x2", "0", "0", "0", "0"],
    ["0", "0", "0", "0", "x3", "0", "-x2", "0", "0"],
    ["0", "0", "0", "0", "0", "x3", "0", "-x2", "0"],
    ["-x3", "0", "0", "0", "0", "0", "0", "0", "0"],
    ["x2", "-x3", "0", "0", "0", "0", "0", "0", "0"],
    ["0", "0", "-x3", "0", "0", "0", "0", "0", "0"],
    ["0", "x2", "0", "0", "0", "0", "0", "0", "0"],
    ["0", "0", "x2", "0", "0", "0", "0", "0", "0"],
    ["-x4", "0", "0", "0", "0", "0", "0", "0", "0"],
    ["0", "-x4", "0", "0", "0", "0", "0", "0", "0"],
    ["x2", "0", "-x4", "0", "0", "0", "0", "0", "0"],
];

/// Labels of the self-dual bases of B₁, B₂, B₃.
pub const LABELS_B1: [&str; 9] = [
    "X(1; 2; [0,2,0,0])",
    "X(1; 2; [0,1,1,0])",
    "X(1; 2; [0,1,0,1])",
    "Y(1; 2; [0,1,0,0])",
    "Y(1; 2; [0,0,1,0])",
    "Y(1; 2; [0,0,0,1])",
    "Y(1; 3; [0,0,1,0])",
    "Y(1; 3; [0,0,0,1])",
    "Y(1; 4; [0,0,0,1])",
];

pub const LABELS_B2: [&str; 16] = [
    "X(2; 2,3; [0,2,0,0])",
    "X(2; 2,3; [0,1,1,0])",
    "X(2; 2,3; [0,1,0,1])",
    "X(2; 2,3; [0,0,2,0])",
    "X(2; 2,3; [0,0,1,1])",
    "X(2; 2,4; [0,2,0,0])",
    "X(2; 2,4; [0,1,1,0])",
    "X(2; 2,4; [0,1,0,1])",
    "Y(2; 2,4; [0,1,0,0])",
    "Y(2; 2,4; [0,0,1,0])",
    "Y(2; 2,4; [0,0,0,1])",
    "Y(2; 3,4; [0,0,1,0])",
    "Y(2; 3,4; [0,0,0,1])",
    "-Y(2; 2,3; [0,1,0,0])",
    "-Y(2; 2,3; [0,0,1,0])",
    "-Y(2; 2,3; [0,0,0,1])",
];

pub const LABELS_B3: [&str; 9] = [
    "-Y(3; 2,3,4; [0,1,0,0])",
    "-Y(3; 2,3,4; [0,0,1,0])",
    "-Y(3; 2,3,4; [0,0,0,1])",
    "X(3; 2,3,4; [0,2,0,0])",
    "X(3; 2,3,4; [0,1,1,0])",
    "X(3; 2,3,4; [0,1,0,1])",
    "X(3; 2,3,4; [0,0,2,0])",
    "X(3; 2,3,4; [0,0,1,1])",
    "X(3; 2,3,4; [0,0,0,2])",
];
