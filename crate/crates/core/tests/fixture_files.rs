//! The files under `fixtures/` are generated from the library; set
//! `OMPLAB_BLESS=1` to rewrite them.

use std::fs;
use std::path::PathBuf;

use omplab::catalog::catalog;
use omplab::format::{write_iop, write_omp};
use omplab::iop::build_iop_from_omp;
use omplab::logic::FIXTURES;

fn root() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures")
}

fn expected() -> Vec<(PathBuf, String)> {
    let mut out = Vec::new();
    for f in FIXTURES {
        let mut text = format!("# {}\n", f.statement);
        for h in f.hypotheses {
            text += &format!("# hyp {h}\n");
        }
        text += f.text;
        out.push((root().join("proofs").join(format!("{}.prf", f.name)), text));
        let bad = format!("# {} (corrupted at line {})\n{}", f.statement, f.corrupt_line, f.corrupted_text());
        out.push((root().join("proofs/corrupted").join(format!("{}.prf", f.name)), bad));
    }
    for e in catalog() {
        let stem = e.name.to_lowercase();
        out.push((root().join("models").join(format!("{stem}.omp")), write_omp(&e.structure)));
        if let Ok(t) = build_iop_from_omp(&e.structure) {
            out.push((root().join("models").join(format!("{stem}.iop")), write_iop(&t)));
        }
    }
    out
}

#[test]
fn fixture_files_are_in_sync() {
    let bless = std::env::var_os("OMPLAB_BLESS").is_some();
    for (path, text) in expected() {
        if bless {
            fs::create_dir_all(path.parent().unwrap()).unwrap();
            fs::write(&path, &text).unwrap();
            continue;
        }
        let on_disk = fs::read_to_string(&path)
            .unwrap_or_else(|e| panic!("{}: {e}; run with OMPLAB_BLESS=1", path.display()));
        assert_eq!(on_disk, text, "{} is stale; run with OMPLAB_BLESS=1", path.display());
    }
}

#[test]
fn model_files_load_back() {
    for e in catalog() {
        let path = root().join("models").join(format!("{}.omp", e.name.to_lowercase()));
        let Ok(text) = fs::read_to_string(&path) else { continue };
        let p = omplab::format::parse_omp(&text).unwrap();
        assert!(p.same_structure(&e.structure), "{}", e.name);
    }
}
