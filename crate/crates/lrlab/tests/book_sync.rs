//! Keeps the guide and the API documentation in lockstep: every Rust
//! snippet in the book must appear verbatim as a doc-test in the crate
//! sources, so `cargo test` exercises exactly the code the book shows.

use std::fs;
use std::path::PathBuf;

fn normalize(block: &[String]) -> String {
    block
        .iter()
        .map(|l| l.trim_end())
        .collect::<Vec<_>>()
        .join("\n")
}

/// Code blocks inside `//!` or `///` doc comments, fence markers excluded.
fn doc_blocks(source: &str) -> Vec<String> {
    let mut blocks = Vec::new();
    let mut current: Option<Vec<String>> = None;
    for line in source.lines() {
        let trimmed = line.trim_start();
        let body = ["//! ", "/// "]
            .iter()
            .find_map(|p| trimmed.strip_prefix(p))
            .or_else(|| {
                ["//!", "///"]
                    .iter()
                    .find_map(|p| (trimmed == *p).then_some(""))
            });
        let Some(body) = body else {
            // A non-doc line closes any open fence (defensive; doc
            // comments do not interleave with code in this crate).
            current = None;
            continue;
        };
        if body.trim_start().starts_with("```") {
            match current.take() {
                Some(block) => blocks.push(normalize(&block)),
                None => current = Some(Vec::new()),
            }
        } else if let Some(block) = current.as_mut() {
            block.push(body.to_string());
        }
    }
    blocks
}

/// Fenced blocks tagged `rust` in a Markdown file.
fn rust_blocks(markdown: &str) -> Vec<String> {
    let mut blocks = Vec::new();
    let mut current: Option<Vec<String>> = None;
    for line in markdown.lines() {
        let trimmed = line.trim_start();
        match current.as_mut() {
            None => {
                if trimmed.trim_end() == "```rust" {
                    current = Some(Vec::new());
                }
            }
            Some(block) => {
                if trimmed.trim_end() == "```" {
                    blocks.push(normalize(&block.clone()));
                    current = None;
                } else {
                    block.push(line.to_string());
                }
            }
        }
    }
    blocks
}

fn files_with_extension(dir: &PathBuf, ext: &str) -> Vec<PathBuf> {
    let mut out: Vec<PathBuf> = fs::read_dir(dir)
        .unwrap_or_else(|e| panic!("cannot read {}: {e}", dir.display()))
        .map(|entry| entry.unwrap().path())
        .filter(|p| p.extension().is_some_and(|x| x == ext))
        .collect();
    out.sort();
    out
}

#[test]
fn every_book_snippet_is_a_doc_test() {
    let manifest = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    let src_dir = manifest.join("src");
    let book_dir = manifest.join("../../book/src");

    let mut doc_examples = Vec::new();
    for path in files_with_extension(&src_dir, "rs") {
        doc_examples.extend(doc_blocks(&fs::read_to_string(&path).unwrap()));
    }
    let bin_dir = src_dir.join("bin");
    if bin_dir.is_dir() {
        for path in files_with_extension(&bin_dir, "rs") {
            doc_examples.extend(doc_blocks(&fs::read_to_string(&path).unwrap()));
        }
    }
    assert!(!doc_examples.is_empty(), "no doc examples found in src/");

    let mut book_snippets = 0usize;
    for path in files_with_extension(&book_dir, "md") {
        let text = fs::read_to_string(&path).unwrap();
        for block in rust_blocks(&text) {
            assert!(
                doc_examples.contains(&block),
                "snippet in {} has no matching doc-test:\n{block}",
                path.display()
            );
            book_snippets += 1;
        }
    }
    assert!(
        book_snippets >= 7,
        "expected the book to embed the module examples, found {book_snippets}"
    );
}
