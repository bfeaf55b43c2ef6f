//! Transcribed data: group elements, shapes, characters and extraction matrices.

/// Variable sets as (y-permutation, z-permutation), 1-based; position i receives variable p[i].
pub const VARIABLE_SETS: [(&str, &str); 36] = [
    ("123", "123"),
    ("123", "132"),
    ("123", "213"),
    ("123", "321"),
    ("123", "231"),
    ("123", "312"),
    ("132", "123"),
    ("213", "123"),
    ("321", "123"),
    ("132", "132"),
    ("213", "132"),
    ("321", "132"),
    ("132", "213"),
    ("132", "321"),
    ("213", "213"),
    ("213", "321"),
    ("321", "213"),
    ("321", "321"),
    ("132", "231"),
    ("213", "231"),
    ("321", "231"),
    ("132", "312"),
    ("213", "312"),
    ("321", "312"),
    ("231", "123"),
    ("312", "123"),
    ("231", "132"),
    ("312", "132"),
    ("231", "213"),
    ("231", "321"),
    ("312", "213"),
    ("312", "321"),
    ("231", "231"),
    ("312", "231"),
    ("231", "312"),
    ("312", "312"),
];

/// Shapes as sums of coef * x_klm * y_klm * z_klm.
pub const SHAPES: [&[(i64, &str, &str, &str)]; 36] = [
    &[(1, "222", "222", "222")],
    &[(2, "212", "212", "222"), (1, "221", "212", "222"), (1, "212", "221", "222"), (2, "221", "221", "222")],
    &[(2, "212", "222", "212"), (1, "221", "222", "212"), (1, "212", "222", "221"), (2, "221", "222", "221")],
    &[(2, "222", "212", "212"), (1, "222", "221", "212"), (1, "222", "212", "221"), (2, "222", "221", "221")],
    &[(-1, "121", "212", "222"), (1, "211", "212", "222"), (1, "121", "221", "222"), (2, "211", "221", "222")],
    &[(-1, "121", "222", "212"), (1, "211", "222", "212"), (1, "121", "222", "221"), (2, "211", "222", "221")],
    &[(-1, "212", "121", "222"), (1, "221", "121", "222"), (1, "212", "211", "222"), (2, "221", "211", "222")],
    &[(-1, "221", "212", "212"), (-1, "212", "221", "212"), (-1, "221", "221", "212"), (-1, "212", "212", "221"), (-1, "221", "212", "221"), (-1, "212", "221", "221")],
    &[(-1, "212", "222", "121"), (1, "221", "222", "121"), (1, "212", "222", "211"), (2, "221", "222", "211")],
    &[(-1, "222", "121", "212"), (1, "222", "211", "212"), (1, "222", "121", "221"), (2, "222", "211", "221")],
    &[(-1, "222", "212", "121"), (1, "222", "221", "121"), (1, "222", "212", "211"), (2, "222", "221", "211")],
    &[(2, "121", "121", "222"), (1, "211", "121", "222"), (1, "121", "211", "222"), (2, "211", "211", "222")],
    &[(-1, "121", "212", "212"), (-1, "211", "212", "212"), (-1, "211", "221", "212"), (-1, "211", "212", "221"), (1, "121", "221", "221")],
    &[(2, "121", "222", "121"), (1, "211", "222", "121"), (1, "121", "222", "211"), (2, "211", "222", "211")],
    &[(-1, "212", "121", "212"), (-1, "212", "211", "212"), (-1, "221", "211", "212"), (1, "221", "121", "221"), (-1, "212", "211", "221")],
    &[(-1, "212", "212", "121"), (1, "221", "221", "121"), (-1, "212", "212", "211"), (-1, "221", "212", "211"), (-1, "212", "221", "211")],
    &[(2, "222", "121", "121"), (1, "222", "211", "121"), (1, "222", "121", "211"), (2, "222", "211", "211")],
    &[(3, "210", "221", "212"), (-3, "210", "212", "221")],
    &[(-1, "121", "121", "212"), (1, "211", "211", "212"), (-1, "121", "121", "221"), (-1, "211", "121", "221"), (-1, "121", "211", "221")],
    &[(-1, "121", "212", "121"), (-1, "121", "221", "121"), (-1, "211", "221", "121"), (1, "211", "212", "211"), (-1, "121", "221", "211")],
    &[(3, "221", "210", "212"), (-3, "212", "210", "221")],
    &[(-1, "212", "121", "121"), (-1, "221", "121", "121"), (-1, "221", "211", "121"), (-1, "221", "121", "211"), (1, "212", "211", "211")],
    &[(3, "221", "212", "210"), (-3, "212", "221", "210")],
    &[(6, "210", "210", "222")],
    &[(3, "210", "121", "212"), (3, "210", "211", "212"), (3, "210", "121", "221")],
    &[(3, "210", "212", "121"), (3, "210", "221", "121"), (3, "210", "212", "211")],
    &[(6, "210", "222", "210")],
    &[(3, "121", "210", "212"), (3, "211", "210", "212"), (3, "121", "210", "221")],
    &[(-1, "211", "121", "121"), (-1, "121", "211", "121"), (-1, "211", "211", "121"), (-1, "121", "121", "211"), (-1, "211", "121", "211"), (-1, "121", "211", "211")],
    &[(3, "121", "212", "210"), (3, "211", "212", "210"), (3, "121", "221", "210")],
    &[(3, "212", "210", "121"), (3, "221", "210", "121"), (3, "212", "210", "211")],
    &[(3, "212", "121", "210"), (3, "221", "121", "210"), (3, "212", "211", "210")],
    &[(6, "222", "210", "210")],
    &[(-3, "210", "211", "121"), (3, "210", "121", "211")],
    &[(-3, "211", "210", "121"), (3, "121", "210", "211")],
    &[(-3, "211", "121", "210"), (3, "121", "211", "210")],
];

/// Block membership of each shape.
pub const SHAPE_BLOCK: [usize; 36] = [1, 4, 6, 8, 4, 6, 4, 10, 6, 8, 8, 4, 10, 6, 10, 10, 8, 9, 10, 10, 7, 10, 5, 2, 9, 9, 3, 7, 10, 5, 7, 5, 0, 9, 7, 5];

pub const CHI: [[i32; 36]; 9] = [
    [1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1],
    [1, -1, -1, -1, 1, 1, -1, -1, -1, 1, 1, 1, 1, 1, 1, 1, 1, 1, -1, -1, -1, -1, -1, -1, 1, 1, -1, -1, -1, -1, -1, -1, 1, 1, 1, 1],
    [1, -1, -1, -1, 1, 1, 1, 1, 1, -1, -1, -1, -1, -1, -1, -1, -1, -1, 1, 1, 1, 1, 1, 1, 1, 1, -1, -1, -1, -1, -1, -1, 1, 1, 1, 1],
    [1, 1, 1, 1, 1, 1, -1, -1, -1, -1, -1, -1, -1, -1, -1, -1, -1, -1, -1, -1, -1, -1, -1, -1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1],
    [2, -2, -2, -2, 2, 2, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, -1, -1, 1, 1, 1, 1, 1, 1, -1, -1, -1, -1],
    [2, 2, 2, 2, 2, 2, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, -1, -1, -1, -1, -1, -1, -1, -1, -1, -1, -1, -1],
    [2, 0, 0, 0, -1, -1, -2, -2, -2, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 1, 1, 1, 1, 2, 2, 0, 0, 0, 0, 0, 0, -1, -1, -1, -1],
    [2, 0, 0, 0, -1, -1, 2, 2, 2, 0, 0, 0, 0, 0, 0, 0, 0, 0, -1, -1, -1, -1, -1, -1, 2, 2, 0, 0, 0, 0, 0, 0, -1, -1, -1, -1],
    [4, 0, 0, 0, -2, -2, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, -2, -2, 0, 0, 0, 0, 0, 0, 1, 1, 1, 1],
];

pub const ETA_BAR: [[i32; 36]; 11] = [
    [1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1],
    [1, -1, -1, -1, 1, 1, -1, -1, -1, 1, 1, 1, 1, 1, 1, 1, 1, 1, -1, -1, -1, -1, -1, -1, 1, 1, -1, -1, -1, -1, -1, -1, 1, 1, 1, 1],
    [1, -1, -1, -1, 1, 1, 1, 1, 1, -1, -1, -1, -1, -1, -1, -1, -1, -1, 1, 1, 1, 1, 1, 1, 1, 1, -1, -1, -1, -1, -1, -1, 1, 1, 1, 1],
    [1, 1, 1, 1, 1, 1, -1, -1, -1, -1, -1, -1, -1, -1, -1, -1, -1, -1, -1, -1, -1, -1, -1, -1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1],
    [4, -4, -4, -4, 4, 4, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, -2, -2, 2, 2, 2, 2, 2, 2, -2, -2, -2, -2],
    [4, 4, 4, 4, 4, 4, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, -2, -2, -2, -2, -2, -2, -2, -2, -2, -2, -2, -2],
    [4, 0, 0, 0, -2, -2, -4, -4, -4, 0, 0, 0, 0, 0, 0, 0, 0, 0, 2, 2, 2, 2, 2, 2, 4, 4, 0, 0, 0, 0, 0, 0, -2, -2, -2, -2],
    [4, 0, 0, 0, -2, -2, 4, 4, 4, 0, 0, 0, 0, 0, 0, 0, 0, 0, -2, -2, -2, -2, -2, -2, 4, 4, 0, 0, 0, 0, 0, 0, -2, -2, -2, -2],
    [4, 0, 0, 0, -2, -2, 0, 0, 0, 4, -2, -2, -2, -2, 4, -2, -2, 4, 0, 0, 0, 0, 0, 0, -2, -2, 0, 0, 0, 0, 0, 0, 4, -2, -2, 4],
    [4, 0, 0, 0, -2, -2, 0, 0, 0, -4, 2, 2, 2, 2, -4, 2, 2, -4, 0, 0, 0, 0, 0, 0, -2, -2, 0, 0, 0, 0, 0, 0, 4, -2, -2, 4],
    [8, 0, 0, 0, -4, -4, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, -4, -4, 0, 0, 0, 0, 0, 0, -4, 8, 8, -4],
];

/// Matrix entries as integer combinations of harmonic products, row-major.
pub const M4: [&[(i64, &str)]; 16] = [
    &[(1, "x121 y121"), (1, "x211 y121"), (1, "x211 y211")],
    &[(-1, "x121 y121"), (1, "x211 y211")],
    &[(1, "x211 y121"), (1, "x121 y211"), (1, "x211 y211")],
    &[(1, "x211 y121"), (-1, "x121 y211")],
    &[(-1, "x221 y121"), (-1, "x212 y211"), (-1, "x221 y211")],
    &[(-1, "x212 y121"), (-1, "x212 y211"), (-1, "x221 y211")],
    &[(-1, "x212 y121"), (-1, "x221 y121"), (-1, "x221 y211")],
    &[(-1, "x212 y121"), (-1, "x221 y121"), (-1, "x212 y211")],
    &[(1, "x121 y212"), (-1, "x211 y221")],
    &[(-1, "x121 y212"), (-1, "x211 y212"), (-1, "x211 y221")],
    &[(-1, "x121 y212"), (-1, "x121 y221"), (-1, "x211 y221")],
    &[(1, "x121 y212"), (1, "x211 y212"), (1, "x121 y221")],
    &[(1, "x212 y212"), (1, "x212 y221"), (1, "x221 y221")],
    &[(1, "x221 y212"), (1, "x212 y221"), (1, "x221 y221")],
    &[(-1, "x212 y212"), (1, "x221 y221")],
    &[(-1, "x221 y212"), (1, "x212 y221")],
];

pub const M5: [&[(i64, &str)]; 16] = [
    &[(-1, "x121 y121"), (1, "x211 y121"), (-2, "x121 y211"), (-1, "x211 y211")],
    &[(-1, "x121 y121"), (-2, "x211 y121"), (-2, "x121 y211"), (-1, "x211 y211")],
    &[(-2, "x121 y121"), (-1, "x211 y121"), (-1, "x121 y211"), (1, "x211 y211")],
    &[(-2, "x121 y121"), (-1, "x211 y121"), (-1, "x121 y211"), (-2, "x211 y211")],
    &[(-2, "x212 y121"), (-1, "x221 y121"), (-1, "x212 y211"), (1, "x221 y211")],
    &[(1, "x212 y121"), (2, "x221 y121"), (-1, "x212 y211"), (1, "x221 y211")],
    &[(-1, "x212 y121"), (1, "x221 y121"), (-2, "x212 y211"), (-1, "x221 y211")],
    &[(-1, "x212 y121"), (1, "x221 y121"), (1, "x212 y211"), (2, "x221 y211")],
    &[(-1, "x121 y212"), (-2, "x211 y212"), (-2, "x121 y221"), (-1, "x211 y221")],
    &[(-1, "x121 y212"), (1, "x211 y212"), (-2, "x121 y221"), (-1, "x211 y221")],
    &[(1, "x121 y212"), (2, "x211 y212"), (-1, "x121 y221"), (1, "x211 y221")],
    &[(1, "x121 y212"), (-1, "x211 y212"), (-1, "x121 y221"), (-2, "x211 y221")],
    &[(-1, "x212 y212"), (-2, "x221 y212"), (1, "x212 y221"), (-1, "x221 y221")],
    &[(2, "x212 y212"), (1, "x221 y212"), (1, "x212 y221"), (-1, "x221 y221")],
    &[(1, "x212 y212"), (2, "x221 y212"), (2, "x212 y221"), (1, "x221 y221")],
    &[(-2, "x212 y212"), (-1, "x221 y212"), (-1, "x212 y221"), (-2, "x221 y221")],
];

pub const M6: [&[(i64, &str)]; 16] = [
    &[(1, "x121 z121"), (1, "x211 z121"), (1, "x211 z211")],
    &[(-1, "x121 z121"), (1, "x211 z211")],
    &[(1, "x211 z121"), (1, "x121 z211"), (1, "x211 z211")],
    &[(1, "x211 z121"), (-1, "x121 z211")],
    &[(-1, "x221 z121"), (-1, "x212 z211"), (-1, "x221 z211")],
    &[(-1, "x212 z121"), (-1, "x212 z211"), (-1, "x221 z211")],
    &[(-1, "x212 z121"), (-1, "x221 z121"), (-1, "x221 z211")],
    &[(-1, "x212 z121"), (-1, "x221 z121"), (-1, "x212 z211")],
    &[(1, "x121 z212"), (-1, "x211 z221")],
    &[(-1, "x121 z212"), (-1, "x211 z212"), (-1, "x211 z221")],
    &[(-1, "x121 z212"), (-1, "x121 z221"), (-1, "x211 z221")],
    &[(1, "x121 z212"), (1, "x211 z212"), (1, "x121 z221")],
    &[(1, "x212 z212"), (1, "x212 z221"), (1, "x221 z221")],
    &[(1, "x221 z212"), (1, "x212 z221"), (1, "x221 z221")],
    &[(-1, "x212 z212"), (1, "x221 z221")],
    &[(-1, "x221 z212"), (1, "x212 z221")],
];

pub const M7: [&[(i64, &str)]; 16] = [
    &[(-1, "x121 z121"), (1, "x211 z121"), (-2, "x121 z211"), (-1, "x211 z211")],
    &[(-1, "x121 z121"), (-2, "x211 z121"), (-2, "x121 z211"), (-1, "x211 z211")],
    &[(-2, "x121 z121"), (-1, "x211 z121"), (-1, "x121 z211"), (1, "x211 z211")],
    &[(-2, "x121 z121"), (-1, "x211 z121"), (-1, "x121 z211"), (-2, "x211 z211")],
    &[(-2, "x212 z121"), (-1, "x221 z121"), (-1, "x212 z211"), (1, "x221 z211")],
    &[(1, "x212 z121"), (2, "x221 z121"), (-1, "x212 z211"), (1, "x221 z211")],
    &[(-1, "x212 z121"), (1, "x221 z121"), (-2, "x212 z211"), (-1, "x221 z211")],
    &[(-1, "x212 z121"), (1, "x221 z121"), (1, "x212 z211"), (2, "x221 z211")],
    &[(-1, "x121 z212"), (-2, "x211 z212"), (-2, "x121 z221"), (-1, "x211 z221")],
    &[(-1, "x121 z212"), (1, "x211 z212"), (-2, "x121 z221"), (-1, "x211 z221")],
    &[(1, "x121 z212"), (2, "x211 z212"), (-1, "x121 z221"), (1, "x211 z221")],
    &[(1, "x121 z212"), (-1, "x211 z212"), (-1, "x121 z221"), (-2, "x211 z221")],
    &[(-1, "x212 z212"), (-2, "x221 z212"), (1, "x212 z221"), (-1, "x221 z221")],
    &[(2, "x212 z212"), (1, "x221 z212"), (1, "x212 z221"), (-1, "x221 z221")],
    &[(1, "x212 z212"), (2, "x221 z212"), (2, "x212 z221"), (1, "x221 z221")],
    &[(-2, "x212 z212"), (-1, "x221 z212"), (-1, "x212 z221"), (-2, "x221 z221")],
];

pub const M8: [&[(i64, &str)]; 16] = [
    &[(1, "y121 z121"), (2, "y211 z121"), (-1, "y121 z211"), (1, "y211 z211")],
    &[(2, "y121 z121"), (1, "y211 z121"), (1, "y121 z211"), (2, "y211 z211")],
    &[(-1, "y121 z121"), (1, "y211 z121"), (1, "y121 z211"), (2, "y211 z211")],
    &[(2, "y121 z121"), (1, "y211 z121"), (1, "y121 z211"), (-1, "y211 z211")],
    &[(-1, "y212 z121"), (-2, "y221 z121"), (-2, "y212 z211"), (-1, "y221 z211")],
    &[(1, "y212 z121"), (-1, "y221 z121"), (-1, "y212 z211"), (-2, "y221 z211")],
    &[(-2, "y212 z121"), (-1, "y221 z121"), (-1, "y212 z211"), (-2, "y221 z211")],
    &[(1, "y212 z121"), (-1, "y221 z121"), (2, "y212 z211"), (1, "y221 z211")],
    &[(2, "y121 z212"), (1, "y211 z212"), (1, "y121 z221"), (-1, "y211 z221")],
    &[(1, "y121 z212"), (-1, "y211 z212"), (-1, "y121 z221"), (-2, "y211 z221")],
    &[(-2, "y121 z212"), (-1, "y211 z212"), (-1, "y121 z221"), (-2, "y211 z221")],
    &[(1, "y121 z212"), (2, "y211 z212"), (-1, "y121 z221"), (1, "y211 z221")],
    &[(1, "y212 z212"), (-1, "y221 z212"), (2, "y212 z221"), (1, "y221 z221")],
    &[(2, "y212 z212"), (1, "y221 z212"), (1, "y212 z221"), (2, "y221 z221")],
    &[(-1, "y212 z212"), (1, "y221 z212"), (1, "y212 z221"), (2, "y221 z221")],
    &[(-1, "y212 z212"), (-2, "y221 z212"), (-2, "y212 z221"), (-1, "y221 z221")],
];

pub const M9: [&[(i64, &str)]; 16] = [
    &[(1, "y121 z121"), (1, "y211 z121"), (1, "y211 z211")],
    &[(-1, "y121 z121"), (1, "y211 z211")],
    &[(1, "y211 z121"), (1, "y121 z211"), (1, "y211 z211")],
    &[(1, "y211 z121"), (-1, "y121 z211")],
    &[(-1, "y221 z121"), (-1, "y212 z211"), (-1, "y221 z211")],
    &[(-1, "y212 z121"), (-1, "y212 z211"), (-1, "y221 z211")],
    &[(-1, "y212 z121"), (-1, "y221 z121"), (-1, "y221 z211")],
    &[(-1, "y212 z121"), (-1, "y221 z121"), (-1, "y212 z211")],
    &[(-1, "y121 z212"), (1, "y211 z221")],
    &[(1, "y121 z212"), (1, "y211 z212"), (1, "y211 z221")],
    &[(1, "y121 z212"), (1, "y121 z221"), (1, "y211 z221")],
    &[(-1, "y121 z212"), (-1, "y211 z212"), (-1, "y121 z221")],
    &[(1, "y212 z212"), (1, "y212 z221"), (1, "y221 z221")],
    &[(1, "y221 z212"), (1, "y212 z221"), (1, "y221 z221")],
    &[(-1, "y212 z212"), (1, "y221 z221")],
    &[(-1, "y221 z212"), (1, "y212 z221")],
];

pub const M10: [&[(i64, &str)]; 64] = [
    &[(-2, "x121 y121 z121"), (-1, "x121 y211 z121"), (-1, "x121 y121 z211"), (1, "x121 y211 z211")],
    &[(1, "x121 y121 z121"), (2, "x121 y211 z121"), (-1, "x121 y121 z211"), (1, "x121 y211 z211")],
    &[(-1, "x121 y121 z121"), (1, "x121 y211 z121"), (-2, "x121 y121 z211"), (-1, "x121 y211 z211")],
    &[(-1, "x121 y121 z121"), (1, "x121 y211 z121"), (1, "x121 y121 z211"), (2, "x121 y211 z211")],
    &[(1, "x121 y121 z121"), (1, "x211 y121 z121"), (1, "x121 y211 z121"), (1, "x211 y211 z121"), (1, "x121 y211 z211"), (1, "x211 y211 z211")],
    &[(1, "x121 y121 z121"), (1, "x211 y121 z121"), (1, "x121 y121 z211"), (1, "x211 y121 z211"), (1, "x121 y211 z211"), (1, "x211 y211 z211")],
    &[(-1, "x121 y121 z121"), (-1, "x211 y121 z121"), (-1, "x121 y211 z121"), (-1, "x211 y211 z121"), (-1, "x121 y121 z211"), (-1, "x211 y121 z211")],
    &[(-1, "x121 y121 z121"), (-1, "x211 y121 z121"), (1, "x121 y211 z211"), (1, "x211 y211 z211")],
    &[(-2, "x212 y121 z121"), (-1, "x212 y211 z121"), (-1, "x212 y121 z211"), (1, "x212 y211 z211")],
    &[(1, "x212 y121 z121"), (2, "x212 y211 z121"), (-1, "x212 y121 z211"), (1, "x212 y211 z211")],
    &[(-1, "x212 y121 z121"), (1, "x212 y211 z121"), (-2, "x212 y121 z211"), (-1, "x212 y211 z211")],
    &[(-1, "x212 y121 z121"), (1, "x212 y211 z121"), (1, "x212 y121 z211"), (2, "x212 y211 z211")],
    &[(-1, "x221 y121 z121"), (-1, "x221 y211 z121"), (-1, "x221 y211 z211")],
    &[(-1, "x221 y121 z121"), (-1, "x221 y121 z211"), (-1, "x221 y211 z211")],
    &[(1, "x221 y121 z121"), (1, "x221 y211 z121"), (1, "x221 y121 z211")],
    &[(1, "x221 y121 z121"), (-1, "x221 y211 z211")],
    &[(-1, "x121 y212 z121"), (1, "x121 y221 z121"), (-2, "x121 y212 z211"), (-1, "x121 y221 z211")],
    &[(-1, "x121 y212 z121"), (-2, "x121 y221 z121"), (-2, "x121 y212 z211"), (-1, "x121 y221 z211")],
    &[(-2, "x121 y212 z121"), (-1, "x121 y221 z121"), (-1, "x121 y212 z211"), (1, "x121 y221 z211")],
    &[(-2, "x121 y212 z121"), (-1, "x121 y221 z121"), (-1, "x121 y212 z211"), (-2, "x121 y221 z211")],
    &[(-1, "x121 y221 z121"), (-1, "x211 y221 z121"), (-1, "x121 y212 z211"), (-1, "x211 y212 z211"), (-1, "x121 y221 z211"), (-1, "x211 y221 z211")],
    &[(1, "x121 y212 z121"), (1, "x211 y212 z121"), (-1, "x121 y221 z211"), (-1, "x211 y221 z211")],
    &[(1, "x121 y221 z121"), (1, "x211 y221 z121"), (-1, "x121 y212 z211"), (-1, "x211 y212 z211")],
    &[(-1, "x121 y212 z121"), (-1, "x211 y212 z121"), (-1, "x121 y212 z211"), (-1, "x211 y212 z211"), (-1, "x121 y221 z211"), (-1, "x211 y221 z211")],
    &[(-1, "x121 y121 z212"), (-2, "x121 y211 z212"), (1, "x121 y121 z221"), (-1, "x121 y211 z221")],
    &[(2, "x121 y121 z212"), (1, "x121 y211 z212"), (1, "x121 y121 z221"), (-1, "x121 y211 z221")],
    &[(1, "x121 y121 z212"), (2, "x121 y211 z212"), (2, "x121 y121 z221"), (1, "x121 y211 z221")],
    &[(-2, "x121 y121 z212"), (-1, "x121 y211 z212"), (-1, "x121 y121 z221"), (-2, "x121 y211 z221")],
    &[(1, "x121 y121 z212"), (1, "x211 y121 z212"), (-1, "x121 y211 z221"), (-1, "x211 y211 z221")],
    &[(-1, "x121 y211 z212"), (-1, "x211 y211 z212"), (-1, "x121 y121 z221"), (-1, "x211 y121 z221"), (-1, "x121 y211 z221"), (-1, "x211 y211 z221")],
    &[(-1, "x121 y211 z212"), (-1, "x211 y211 z212"), (1, "x121 y121 z221"), (1, "x211 y121 z221")],
    &[(-1, "x121 y121 z212"), (-1, "x211 y121 z212"), (-1, "x121 y211 z212"), (-1, "x211 y211 z212"), (-1, "x121 y211 z221"), (-1, "x211 y211 z221")],
    &[(1, "x212 y212 z121"), (-1, "x212 y221 z121"), (2, "x212 y212 z211"), (1, "x212 y221 z211")],
    &[(1, "x212 y212 z121"), (2, "x212 y221 z121"), (2, "x212 y212 z211"), (1, "x212 y221 z211")],
    &[(2, "x212 y212 z121"), (1, "x212 y221 z121"), (1, "x212 y212 z211"), (-1, "x212 y221 z211")],
    &[(2, "x212 y212 z121"), (1, "x212 y221 z121"), (1, "x212 y212 z211"), (2, "x212 y221 z211")],
    &[(-1, "x221 y221 z121"), (-1, "x221 y212 z211"), (-1, "x221 y221 z211")],
    &[(1, "x221 y212 z121"), (-1, "x221 y221 z211")],
    &[(1, "x221 y221 z121"), (-1, "x221 y212 z211")],
    &[(-1, "x221 y212 z121"), (-1, "x221 y212 z211"), (-1, "x221 y221 z211")],
    &[(1, "x212 y121 z212"), (2, "x212 y211 z212"), (-1, "x212 y121 z221"), (1, "x212 y211 z221")],
    &[(-2, "x212 y121 z212"), (-1, "x212 y211 z212"), (-1, "x212 y121 z221"), (1, "x212 y211 z221")],
    &[(-1, "x212 y121 z212"), (-2, "x212 y211 z212"), (-2, "x212 y121 z221"), (-1, "x212 y211 z221")],
    &[(2, "x212 y121 z212"), (1, "x212 y211 z212"), (1, "x212 y121 z221"), (2, "x212 y211 z221")],
    &[(1, "x221 y121 z212"), (-1, "x221 y211 z221")],
    &[(-1, "x221 y211 z212"), (-1, "x221 y121 z221"), (-1, "x221 y211 z221")],
    &[(-1, "x221 y211 z212"), (1, "x221 y121 z221")],
    &[(-1, "x221 y121 z212"), (-1, "x221 y211 z212"), (-1, "x221 y211 z221")],
    &[(-1, "x121 y212 z212"), (-2, "x121 y221 z212"), (-2, "x121 y212 z221"), (-1, "x121 y221 z221")],
    &[(-1, "x121 y212 z212"), (1, "x121 y221 z212"), (-2, "x121 y212 z221"), (-1, "x121 y221 z221")],
    &[(1, "x121 y212 z212"), (2, "x121 y221 z212"), (-1, "x121 y212 z221"), (1, "x121 y221 z221")],
    &[(1, "x121 y212 z212"), (-1, "x121 y221 z212"), (-1, "x121 y212 z221"), (-2, "x121 y221 z221")],
    &[(-1, "x121 y212 z212"), (-1, "x211 y212 z212"), (-1, "x121 y212 z221"), (-1, "x211 y212 z221"), (-1, "x121 y221 z221"), (-1, "x211 y221 z221")],
    &[(-1, "x121 y212 z212"), (-1, "x211 y212 z212"), (-1, "x121 y221 z212"), (-1, "x211 y221 z212"), (-1, "x121 y221 z221"), (-1, "x211 y221 z221")],
    &[(-1, "x121 y212 z212"), (-1, "x211 y212 z212"), (-1, "x121 y221 z212"), (-1, "x211 y221 z212"), (-1, "x121 y212 z221"), (-1, "x211 y212 z221")],
    &[(-1, "x121 y221 z212"), (-1, "x211 y221 z212"), (-1, "x121 y212 z221"), (-1, "x211 y212 z221"), (-1, "x121 y221 z221"), (-1, "x211 y221 z221")],
    &[(-1, "x212 y212 z212"), (-2, "x212 y221 z212"), (-2, "x212 y212 z221"), (-1, "x212 y221 z221")],
    &[(-1, "x212 y212 z212"), (1, "x212 y221 z212"), (-2, "x212 y212 z221"), (-1, "x212 y221 z221")],
    &[(1, "x212 y212 z212"), (2, "x212 y221 z212"), (-1, "x212 y212 z221"), (1, "x212 y221 z221")],
    &[(1, "x212 y212 z212"), (-1, "x212 y221 z212"), (-1, "x212 y212 z221"), (-2, "x212 y221 z221")],
    &[(1, "x221 y212 z212"), (1, "x221 y212 z221"), (1, "x221 y221 z221")],
    &[(1, "x221 y212 z212"), (1, "x221 y221 z212"), (1, "x221 y221 z221")],
    &[(1, "x221 y212 z212"), (1, "x221 y221 z212"), (1, "x221 y212 z221")],
    &[(1, "x221 y221 z212"), (1, "x221 y212 z221"), (1, "x221 y221 z221")],
];

/// Rows of the eliminated chi_8 column as (denominator, [(coef, variable set)]).
pub const GG_ROWS: [(i64, &[(i64, usize)]); 16] = [
    (6, &[(1, 4), (-1, 10), (1, 12), (-1, 24)]),
    (6, &[(1, 0), (1, 9), (1, 10), (1, 14), (1, 24), (1, 32)]),
    (6, &[(1, 1), (1, 2), (1, 6), (1, 7), (1, 18), (1, 26)]),
    (6, &[(1, 2), (-1, 6), (1, 23), (1, 26), (1, 28)]),
    (6, &[(-1, 4), (-1, 10), (1, 12), (1, 24)]),
    (6, &[(1, 1), (1, 2), (-1, 6), (-1, 7), (-1, 18), (1, 26)]),
    (6, &[(-1, 1), (2, 6), (1, 7), (1, 18), (-1, 23), (1, 28)]),
    (6, &[(1, 0), (1, 4), (-1, 9), (-1, 12), (-1, 14), (1, 32)]),
    (3, &[(1, 0), (-1, 9), (-1, 10), (-1, 12), (-1, 32)]),
    (3, &[(1, 1), (-1, 7), (1, 18), (1, 26), (1, 28)]),
    (3, &[(1, 2), (1, 7), (-1, 23), (-1, 26)]),
    (3, &[(1, 4), (1, 9), (-1, 14), (1, 24), (1, 32)]),
    (3, &[(-1, 1), (1, 2), (-1, 7), (-1, 18), (2, 23), (-2, 26), (-1, 28)]),
    (3, &[(2, 1), (1, 2), (2, 7), (-1, 18), (-1, 23), (1, 26), (2, 28)]),
    (3, &[(-2, 0), (-1, 4), (1, 9), (-1, 10), (-1, 12), (-2, 14), (-1, 24), (1, 32)]),
    (3, &[(1, 0), (-1, 4), (1, 9), (2, 10), (2, 12), (1, 14), (-1, 24), (-2, 32)]),
];

/// Order of the shapes solved by the chi_8 system.
pub const CHI8_ORDER: [usize; 16] = [3, 9, 10, 16, 17, 24, 25, 33, 7, 12, 14, 15, 18, 19, 21, 28];
