//! Published values of the two census tables.

/// `(q, d, N_q(d))`.
pub const TABLE_1: &[(usize, usize, u64)] = &[
    (4, 1, 12),
    (4, 2, 12),
    (5, 1, 20),
    (5, 3, 100),
    (7, 1, 42),
    (7, 4, 588),
    (7, 5, 4_410),
    (8, 1, 56),
    (8, 2, 56),
    (8, 3, 448),
    (8, 4, 1_232),
    (8, 5, 3_584),
    (8, 6, 34_944),
    (9, 1, 72),
    (9, 3, 360),
    (9, 5, 1_944),
    (9, 6, 39_744),
    (9, 7, 320_760),
    (11, 1, 110),
    (11, 3, 1_210),
    (11, 6, 29_040),
    (11, 7, 272_250),
    (11, 8, 3_332_340),
    (11, 9, 36_281_850),
    (13, 1, 156),
    (13, 5, 38_532),
    (13, 7, 233_220),
    (13, 8, 2_798_640),
    (13, 9, 33_948_720),
    (13, 10, 442_144_560),
    (13, 11, 5_747_856_972),
];

/// Number of PPs over GF(8) of degree below six, as published.
pub const Q8_BELOW_SIX: u64 = 5_376;
/// The earlier value this corrects.
pub const Q8_BELOW_SIX_EARLIER: u64 = 5_368;

/// `(q, d, all, symmetric, reduced)`; `None` marks an empty cell.
pub const TABLE_2: &[(usize, usize, u64, u64, Option<u64>)] = &[
    (4, 1, 36, 12, Some(1)),
    (4, 2, 108, 12, Some(0)),
    (4, 4, 432, 72, Some(3)),
    (5, 1, 80, 20, Some(1)),
    (5, 3, 3_200, 200, Some(0)),
    (5, 5, 22_000, 100, Some(19)),
    (5, 6, 135_920, 400, Some(36)),
];
