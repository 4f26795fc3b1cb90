use serde::Serialize;

use tv_core::EnumerationStats;

/// Pretty JSON on stdout. Field order is fixed by the struct definitions.
pub fn print_json<T: Serialize>(value: &T) {
    println!("{}", serde_json::to_string_pretty(value).expect("serialisable"));
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
pub struct Counts {
    pub admissible: u64,
    pub nodes_visited: u64,
    pub candidates: u64,
}

impl From<EnumerationStats> for Counts {
    fn from(s: EnumerationStats) -> Self {
        Counts { admissible: s.admissible_count, nodes_visited: s.nodes_visited, candidates: s.candidates }
    }
}

/// Doubled colours rendered as colours: 0, 1/2, 1, 3/2, ...
pub fn colour(doubled: u32) -> String {
    if doubled.is_multiple_of(2) {
        (doubled / 2).to_string()
    } else {
        format!("{doubled}/2")
    }
}
