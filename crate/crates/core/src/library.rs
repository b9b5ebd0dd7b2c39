//! Stored patterns behind the constructive colorings.

/// `P_n⊙K_1`, n = 1..9.
pub const PATH_K1_SMALL: [&str; 9] = [
    "2",
    "21(3)",
    "1(2)31(2)",
    "21(3)41(2)",
    "21(3)41(3)2",
    "21(3)41(3)21(3)",
    "1(3)21(3)41(3)21(3)",
    "1(2)31(2)41(2)321(4)",
    "1(4)231(2)41(2)321(4)",
];

/// Period of the 5-coloring of `P_n⊙K_1`, n ≥ 10.
pub const PATH_K1_PERIOD: &str = "1(4)21(5)3";

/// `C_n⊙K_1`, n = 3..7.
pub const CYCLE_K1_SMALL: [&str; 5] = [
    "[234]",
    "[41(2)31(2)]",
    "[321(5)41(2)]",
    "[31(5)21(3)41(2)]",
    "[321(4)51(3)21(4)]",
];

/// Repeated block of `C_n⊙K_1`, n ≥ 8.
pub const CYCLE_K1_BLOCK: &str = "31(5)21(4)";

/// Closing segment of `C_n⊙K_1`, n ≥ 8, indexed by n mod 4.
pub const CYCLE_K1_TAILS: [&str; 4] = ["31(5)21(4)", "321(5)41(2)", "31(5)21(3)41(2)", "321(4)51(3)21(4)"];

/// Longest pattern on colors 2..5 for paths; its prefixes are the small cases.
pub const PATH_FIVE: &str = "23425324";

/// Pattern on colors 2..6 for paths up to 34 spine vertices.
pub const PATH_P4_LONG: &str = "23425 62342 53264 23524 62352 43265 2342";

/// Circular pattern on colors 2..7.
pub const PATH_P4_CIRCULAR: &str = "[23425 62342 57]";

pub const PATH_2K1_FOUR: &str = "2342";
pub const PATH_2K1_ELEVEN: &str = "1(35)243251(23)4231(25)";
pub const PATH_2K1_CIRCULAR: &str = "[1(36)2432 56234 25]";

pub const PATH_3K1_CIRCULAR: &str = "[1(234)5234 26325 4326]";

/// `C_n⊙pK_1`, p ≥ 4, n = 3..6.
pub const CYCLE_SMALL: [&str; 4] = ["[234]", "[2345]", "[23456]", "[234256]"];

/// `C_n⊙pK_1`, p ≥ 4, n = 7..15 (index n − 7); n = 11 uses [`CYCLE_P4_ELEVEN`].
pub const CYCLE_P4_MID: [&str; 9] = [
    "[2342567]",
    "[23425367]",
    "[234253267]",
    "[2342532467]",
    "[23425324678]",
    "[234253246257]",
    "[2342532462357]",
    "[23425362432576]",
    "[234253264235276]",
];

pub const CYCLE_P4_ELEVEN: &str = "[23425324678]";
pub const CYCLE_P4_BASE: &str = "[23425367]";
pub const CYCLE_P4_NINETEEN: &str = "[2342532462352432657]";

/// Shortest cycle extension around a forced color 1 with p ≥ 4.
pub const CYCLE_P4_FORCED: &str = "[43271(2345)623425362]";

/// `C_n⊙2K_1`, n = 7..13 (index n − 7); n = 9 is the 7-color exception.
pub const CYCLE_2K1_MID: [&str; 7] = [
    "[1(23)423526]",
    "[1(24)3251(24)326]",
    "[1(24)3251(24)3267]",
    "[1(23)41(23)523421(35)6]",
    "[1(23)4231(25)624325]",
    "[3241(23)51(26)3241(23)56]",
    "[1(23)41(23)5231(26)423526]",
];

pub const CYCLE_2K1_BASE: &str = "[1(23)423526]";
pub const CYCLE_2K1_NINE_TAIL: &str = "423524326";
/// Tail for n ≡ 4 (mod 7); the n = 11 pattern above does not follow the base.
pub const CYCLE_2K1_ELEVEN_TAIL: &str = "3241(23)523421(35)6";

/// Pendant colors for the 6-color blocks.
pub const CYCLE_3K1_PENDANTS: [u8; 3] = [2, 3, 4];

/// 6-colorings of `C_n⊙3K_1` as `(n, pattern)`.
pub const CYCLE_3K1_BLOCKS: [(usize, &str); 13] = [
    (14, "[1523426325 4326]"),
    (23, "[1523426324 5236423524 326]"),
    (29, "[1523426324 5236423524 623524326]"),
    (38, "[1523426324 5236243251 6234253246 23524326]"),
    (44, "[1523426324 5236243251 6234253264 2352462352 4326]"),
    (46, "[1523426324 5236423524 3261523426 3245236423 524326]"),
    (61, "[1523426324 5236243251 6234253246 2352432615 2342632452 3642352432 6]"),
    (67, "[1523426324 5236243251 6234253246 2352432615 2342632452 3642352462 3524326]"),
    (69, "[1523426324 5236423524 3261523426 3245236423 5243261523 4263245236 423524326]"),
    (73, "[1523426324 5236243251 6234253264 2352462352 4326152342 6324523642 3524623524 326]"),
    (76, "[1523426324 5236243251 6234253246 2352432615 2342632452 3624325162 3425324623 524326]"),
    (82, "[1523426324 5236243251 6234253246 2352432615 2342632452 3624325162 3425326423 5246235243 26]"),
    (92, "[1523426324 5236423524 3261523426 3245236423 5243261523 4263245236 4235243261 5234263245 2364235243 26]"),
];

/// `C_n⊙3K_1` values of n that need 7 colors.
pub const CYCLE_3K1_SEVEN: [usize; 45] = [
    7, 8, 9, 10, 11, 12, 13, 15, 16, 17, 18, 19, 20, 21, 22, 24, 25, 26, 27, 30, 31, 32, 33, 34, 35, 36, 39,
    40, 41, 45, 47, 48, 49, 50, 53, 54, 55, 59, 62, 63, 64, 68, 77, 78, 91,
];

/// A 7-coloring of `C_11⊙3K_1` found by exhaustive search.
pub const CYCLE_3K1_ELEVEN: &str = "[1(235)4236254327]";

/// Mod-14 recipe for `C_n⊙3K_1`: for `n = 14q + r`, `(min n, copies of the
/// 14-pattern to drop, block lengths appended)`.
pub const CYCLE_3K1_RECIPES: [(usize, usize, &[usize]); 14] = [
    (14, 0, &[]),
    (29, 2, &[29]),
    (44, 3, &[44]),
    (73, 5, &[73]),
    (46, 3, &[46]),
    (61, 4, &[61]),
    (76, 5, &[76]),
    (105, 7, &[44, 61]),
    (92, 6, &[92]),
    (23, 1, &[23]),
    (38, 2, &[38]),
    (67, 4, &[67]),
    (82, 5, &[82]),
    (69, 4, &[69]),
];

/// A stored pattern with the parameters it is claimed valid for.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Stored {
    pub text: &'static str,
    pub p: usize,
    pub defaults: Option<&'static [u8]>,
}

/// Every stored pattern, at the smallest p it is meant for.
pub fn all() -> Vec<Stored> {
    let s = |text, p| Stored { text, p, defaults: None };
    let mut v: Vec<Stored> = Vec::new();
    v.extend(PATH_K1_SMALL.iter().map(|t| s(t, 1)));
    v.push(s(PATH_K1_PERIOD, 1));
    v.extend(CYCLE_K1_SMALL.iter().map(|t| s(t, 1)));
    v.push(s(CYCLE_K1_BLOCK, 1));
    v.extend(CYCLE_K1_TAILS.iter().map(|t| s(t, 1)));
    v.push(s(PATH_FIVE, 4));
    v.push(s(PATH_P4_LONG, 4));
    v.push(s(PATH_P4_CIRCULAR, 4));
    v.push(s(PATH_2K1_FOUR, 2));
    v.push(s(PATH_2K1_ELEVEN, 2));
    v.push(s(PATH_2K1_CIRCULAR, 2));
    v.push(s(PATH_3K1_CIRCULAR, 3));
    v.extend(CYCLE_SMALL.iter().map(|t| s(t, 4)));
    v.extend(CYCLE_P4_MID.iter().map(|t| s(t, 4)));
    v.push(s(CYCLE_P4_NINETEEN, 4));
    v.push(s(CYCLE_P4_FORCED, 4));
    v.extend(CYCLE_2K1_MID.iter().map(|t| s(t, 2)));
    v.push(s(CYCLE_2K1_NINE_TAIL, 2));
    v.push(s(CYCLE_2K1_ELEVEN_TAIL, 2));
    v.extend(CYCLE_3K1_BLOCKS.iter().map(|(_, t)| Stored { text: t, p: 3, defaults: Some(&CYCLE_3K1_PENDANTS) }));
    v.push(s(CYCLE_3K1_ELEVEN, 3));
    v
}
