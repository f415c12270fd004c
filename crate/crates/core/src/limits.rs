//! Resource ceilings for the enumeration engines.
//!
//! Every exponential search in the crate checks one of these knobs before it
//! starts, so a mistyped CLI argument fails fast instead of spinning. The
//! defaults are sized for an ordinary desktop.

/// Tunable limits; construct with [`Limits::default`] and override fields.
#[derive(Debug, Clone)]
pub struct Limits {
    /// Vertex enumeration walks `3^d` labelings; refuse above this dimension.
    pub max_vertex_enum_dim: usize,
    /// Signed-permutation enumeration walks `2^d * d!` words. The default 8
    /// is ~10M words; 9 is ~186M (minutes) and must be opted into.
    pub max_signed_perm_dim: usize,
    /// `count_dfs` refuses when `(s+1)^d` exceeds this, where `s` is the
    /// pairwise bound of the dilated system.
    pub max_search_width: f64,
    /// Semigroup membership is layered by degree; refuse targets deeper than
    /// this.
    pub max_semigroup_degree: i64,
    /// Normality checking enumerates `(2k+1)^d` box points per degree `k`.
    pub max_box_points: f64,
    /// The total-unimodularity check enumerates all square minors, which is
    /// exponential in the row count.
    pub max_tu_rows: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_vertex_enum_dim: 16,
            max_signed_perm_dim: 8,
            max_search_width: 1e18,
            max_semigroup_degree: 12,
            max_box_points: 1e9,
            max_tu_rows: 7,
        }
    }
}
