use crate::cnf::{CnfFormula, Lit};
use crate::io::lex::{arg, end_of_input, header, no_more};
use crate::io::FormatError;

/// Parses `p cnf <vars> <clauses>` followed by zero-terminated clauses.
/// Clauses may span lines; lines starting with `c` are comments.
pub fn read_dimacs(text: &str) -> Result<CnfFormula, FormatError> {
    let (hl, ht, body) = header(text, "cnf")?;
    let nv = arg(&hl, &ht, 0, "variable count")?.uint("variable count")?;
    let m_tok = arg(&hl, &ht, 1, "clause count")?;
    let m = m_tok.uint("clause count")?;
    no_more(&ht, 2)?;

    let mut clauses = Vec::with_capacity(m);
    let mut current = Vec::new();
    let mut open = false;
    for line in &body {
        if line.is_blank() || line.is_comment() {
            continue;
        }
        if line.text.starts_with('%') {
            break;
        }
        for t in line.tokens() {
            let l = t.int("literal")?;
            if l == 0 {
                if clauses.len() == m {
                    return Err(t.err(format!("at most {m} clauses")));
                }
                clauses.push(std::mem::take(&mut current));
                open = false;
                continue;
            }
            if l.unsigned_abs() as usize > nv {
                return Err(t.err(format!("literal with variable in 1..={nv}")));
            }
            current.push(Lit::from_dimacs(l).expect("nonzero literal"));
            open = true;
        }
    }
    if open {
        return Err(end_of_input(text, "`0` terminating the last clause"));
    }
    if clauses.len() != m {
        return Err(end_of_input(text, format!("{m} clauses, got {}", clauses.len())));
    }
    CnfFormula::new(nv, clauses).map_err(|e| FormatError {
        line: hl.no,
        offset: hl.start,
        expected: "a well-formed formula".into(),
        found: e.to_string(),
    })
}

pub fn write_dimacs(cnf: &CnfFormula) -> String {
    let mut out = format!("p cnf {} {}\n", cnf.num_vars(), cnf.num_clauses());
    for c in cnf.clauses() {
        for l in c {
            out.push_str(&l.to_dimacs().to_string());
            out.push(' ');
        }
        out.push_str("0\n");
    }
    out
}
