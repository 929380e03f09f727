//! Holds the acceptance tests only; see `tests/acceptance.rs`.
