//! Holds the `acceptance` test target, which runs after every other test in
//! the workspace. See `tests/acceptance.rs`.
