//! Acceptance criteria for the derivation engine. The checks live in
//! `tests/acceptance.rs` and run with `cargo test -p qgarnier-suite`.
