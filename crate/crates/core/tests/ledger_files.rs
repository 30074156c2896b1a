//! The shipped ledger files under `ledgers/` must stay in sync with the
//! built-in constructions, and the file format must round-trip.

use std::path::PathBuf;

use ntpack::{builtin_b3, builtin_ydelta, load_ledger, save_ledger, structurally_equal, Ledger};

fn data_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../..")
        .join("ledgers")
}

fn check_shipped(ledger: &Ledger) {
    let path = data_dir().join(format!("{}.json", ledger.name));
    let loaded = load_ledger(&path).unwrap_or_else(|e| {
        panic!(
            "shipped ledger {} failed to load: {e}\n(regenerate with `cargo test -p ntpack --test ledger_files -- --ignored regenerate`)",
            path.display()
        )
    });
    assert!(
        structurally_equal(ledger, &loaded),
        "shipped ledger {} differs from the built-in construction",
        path.display()
    );
}

#[test]
fn shipped_files_match_builtins() {
    check_shipped(&builtin_b3());
    check_shipped(&builtin_ydelta());
}

#[test]
fn save_load_roundtrip_through_a_tempdir() {
    let dir = tempfile::tempdir().unwrap();
    for ledger in [builtin_b3(), builtin_ydelta()] {
        let path = dir.path().join(format!("{}.json", ledger.name));
        save_ledger(&ledger, &path).unwrap();
        let loaded = load_ledger(&path).unwrap();
        assert!(structurally_equal(&ledger, &loaded));
    }
}

/// Rewrites the shipped files from the built-in constructions.
#[test]
#[ignore]
fn regenerate() {
    for ledger in [builtin_b3(), builtin_ydelta()] {
        let path = data_dir().join(format!("{}.json", ledger.name));
        save_ledger(&ledger, &path).unwrap();
    }
}
