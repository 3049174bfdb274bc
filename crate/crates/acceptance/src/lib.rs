//! Holds the `acceptance` test target, which runs every acceptance criterion
//! of the workspace and prints one PASS or FAIL line per criterion.
