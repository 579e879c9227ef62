use std::path::PathBuf;

use modan_core::fixtures;
use modan_core::io::parse_workspace;

fn fixture(name: &str) -> String {
    let path: PathBuf = [env!("CARGO_MANIFEST_DIR"), "..", "..", "fixtures", &format!("{name}.json")].iter().collect();
    std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()))
}

#[test]
fn shipped_files_match_builtins() {
    for name in fixtures::NAMES.iter().chain(&["B3"]) {
        let ws = parse_workspace(&fixture(name)).unwrap();
        let (a, m) = fixtures::by_name(name).unwrap();
        assert_eq!(ws.algebra, a, "{name}");
        assert_eq!(ws.module, m, "{name}");
    }
}

#[test]
fn broken_and_empty_files() {
    assert!(parse_workspace(&fixture("broken_associativity")).is_err());
    let empty = parse_workspace(&fixture("empty")).unwrap();
    assert_eq!(empty.algebra.dim(), 0);
}
