//! Text formats. All indices are 1-based on disk and 0-based in memory;
//! writers emit canonical LF-terminated ASCII.

mod dimacs;
mod error;
mod graph;
mod lex;
mod pcsp;

pub use dimacs::{read_dimacs, write_dimacs};
pub use error::FormatError;
pub use graph::{read_graph, read_grid, write_graph, write_grid};
pub use pcsp::{
    has_certificate_trailer, read_certificate, read_ordering, read_pcsp, write_certificate,
    write_ordering, write_pcsp,
};

/// The kind of file named by its `p` header.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FileKind {
    Cnf,
    Graph,
    Grid,
    Pcsp,
    Certificate,
}

/// Looks at the first non-comment line to decide the format.
pub fn sniff(text: &str) -> Option<FileKind> {
    let first = text
        .lines()
        .find(|l| !l.trim().is_empty() && !(l.starts_with("c ") || *l == "c"))?;
    let mut toks = first.split_ascii_whitespace();
    if toks.next() != Some("p") {
        return None;
    }
    match toks.next()? {
        "cnf" => Some(FileKind::Cnf),
        "edge" => Some(FileKind::Graph),
        "grid" => Some(FileKind::Grid),
        "pcsp" if has_certificate_trailer(text) => Some(FileKind::Certificate),
        "pcsp" => Some(FileKind::Pcsp),
        _ => None,
    }
}
