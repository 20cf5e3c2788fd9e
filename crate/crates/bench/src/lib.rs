//! Benchmark inputs shared by the criterion targets.

/// `(group, field)` pairs timed end to end.
pub const VERDICT_CASES: [(&str, &str); 4] = [
    ("catalog:C8", "Q"),
    ("catalog:SL2_7", "Q(sqrt 17)"),
    ("catalog:SL2_9", "Q(sqrt -7)"),
    ("catalog:Ex3_3", "Q"),
];
