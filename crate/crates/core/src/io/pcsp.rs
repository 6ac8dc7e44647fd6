use crate::csp::{Constraint, Ordering, PermCspInstance};
use crate::io::lex::{arg, end_of_input, header, lines, no_more, Line, Tok};
use crate::io::FormatError;
use crate::reductions::certificate::{Lineage, ReductionCertificate, ReductionKind};

/// Parses `p pcsp <vars> <constraints> <arity>` followed by one constraint
/// per line, 1-based indices terminated by `0`. Comment lines are skipped.
pub fn read_pcsp(text: &str) -> Result<PermCspInstance, FormatError> {
    let (hl, ht, body) = header(text, "pcsp")?;
    let nv = arg(&hl, &ht, 0, "variable count")?.uint("variable count")?;
    let m = arg(&hl, &ht, 1, "constraint count")?.uint("constraint count")?;
    let arity_tok = arg(&hl, &ht, 2, "arity")?;
    let arity = arity_tok.uint("arity")?;
    no_more(&ht, 3)?;
    if nv == 0 {
        return Err(ht[0].err("a positive variable count"));
    }
    if arity == 0 {
        return Err(arity_tok.err("a positive arity"));
    }

    let mut cons = Vec::with_capacity(m);
    for line in body.iter().filter(|l| !l.is_blank() && !l.is_comment()) {
        let toks = line.tokens();
        let (last, vars) = toks.split_last().expect("non-blank line");
        if last.text != "0" {
            return Err(line.end("`0` terminating the constraint"));
        }
        if vars.is_empty() {
            return Err(last.err("at least one variable"));
        }
        if vars.len() > arity {
            return Err(vars[arity].err(format!("at most {arity} variables")));
        }
        let mut c = Vec::with_capacity(vars.len());
        for t in vars {
            let v = t.index(nv, "variable")? as u32;
            if c.contains(&v) {
                return Err(t.err("a variable not already in the constraint"));
            }
            c.push(v);
        }
        if cons.len() == m {
            return Err(toks[0].err(format!("at most {m} constraints")));
        }
        cons.push(Constraint::new(c));
    }
    if cons.len() != m {
        return Err(end_of_input(text, format!("{m} constraints, got {}", cons.len())));
    }
    Ok(PermCspInstance::new_unchecked(nv, arity, cons))
}

pub fn write_pcsp(inst: &PermCspInstance) -> String {
    let mut out = format!(
        "p pcsp {} {} {}\n",
        inst.num_vars(),
        inst.num_constraints(),
        inst.arity()
    );
    for c in inst.constraints() {
        for &v in c.vars() {
            out.push_str(&(v + 1).to_string());
            out.push(' ');
        }
        out.push_str("0\n");
    }
    out
}

/// One line listing the variables in position order, 1-based.
pub fn read_ordering(text: &str, num_vars: usize) -> Result<Ordering, FormatError> {
    let content: Vec<Line> = lines(text)
        .into_iter()
        .filter(|l| !l.is_blank() && !l.is_comment())
        .collect();
    let line = content
        .first()
        .ok_or_else(|| end_of_input(text, "an ordering line"))?;
    if let Some(extra) = content.get(1) {
        return Err(extra.tokens()[0].err("a single ordering line"));
    }
    let toks = line.tokens();
    let mut seen = vec![false; num_vars];
    let mut seq = Vec::with_capacity(num_vars);
    for t in &toks {
        if seq.len() == num_vars {
            return Err(t.err(format!("exactly {num_vars} variables")));
        }
        let v = t.index(num_vars, "variable")?;
        if seen[v] {
            return Err(t.err("each variable exactly once"));
        }
        seen[v] = true;
        seq.push(v as u32);
    }
    if seq.len() != num_vars {
        return Err(line.end(format!("{num_vars} variables, got {}", seq.len())));
    }
    Ok(Ordering::from_sequence(&seq).expect("checked permutation"))
}

pub fn write_ordering(ord: &Ordering) -> String {
    let seq: Vec<String> = ord.sequence().iter().map(|v| (v + 1).to_string()).collect();
    format!("{}\n", seq.join(" "))
}

/// The instance followed by `c reduction`, `c delta-sum`, `c target` and
/// one `c role` line per element.
pub fn write_certificate(cert: &ReductionCertificate) -> String {
    let lin = &cert.lineage;
    let mut out = write_pcsp(&cert.instance);
    match (lin.kind, lin.degree_bound) {
        (ReductionKind::Perm4, Some(d)) => out.push_str(&format!(
            "c reduction perm4 n {} D {d} dummies {}\n",
            lin.n, lin.dummies
        )),
        (kind, _) => out.push_str(&format!(
            "c reduction {kind} n {} dummies {}\n",
            lin.n, lin.dummies
        )),
    }
    if let Some(ds) = lin.delta_sum {
        out.push_str(&format!("c delta-sum {ds}\n"));
    }
    out.push_str(&format!("c target {}\n", cert.target));
    for (e, role) in cert.roles().into_iter().enumerate() {
        out.push_str(&format!("c role {} {} {}\n", e + 1, role.tag(), role.index() + 1));
    }
    out
}

/// True when the text carries a certificate trailer.
pub fn has_certificate_trailer(text: &str) -> bool {
    lines(text).iter().any(|l| l.text.starts_with("c target "))
}

pub fn read_certificate(text: &str) -> Result<ReductionCertificate, FormatError> {
    let instance = read_pcsp(text)?;
    let mut reduction: Option<(Tok, Lineage)> = None;
    let mut delta_sum = None;
    let mut target = None;
    let mut roles: Vec<Tok> = Vec::new();
    let all = lines(text);
    for line in all.iter().filter(|l| l.is_comment()) {
        let toks = line.tokens();
        let Some(key) = toks.get(1) else { continue };
        match key.text {
            "reduction" => {
                let kind_tok = arg(line, &toks, 2, "reduction kind")?;
                let kind = match kind_tok.text {
                    "perm4" => ReductionKind::Perm4,
                    "perm6" => ReductionKind::Perm6,
                    _ => return Err(kind_tok.err("`perm4` or `perm6`")),
                };
                arg(line, &toks, 3, "`n`")?.expect("n")?;
                let n = arg(line, &toks, 4, "n")?.uint("n")?;
                let mut at = 5;
                let mut degree_bound = None;
                if kind == ReductionKind::Perm4 {
                    arg(line, &toks, at, "`D`")?.expect("D")?;
                    degree_bound = Some(arg(line, &toks, at + 1, "D")?.uint("D")?);
                    at += 2;
                }
                arg(line, &toks, at, "`dummies`")?.expect("dummies")?;
                let dummies = arg(line, &toks, at + 1, "dummy count")?.uint("dummy count")?;
                no_more(&toks, at + 2)?;
                let lin = Lineage {
                    kind,
                    n,
                    degree_bound,
                    dummies,
                    delta_sum: None,
                };
                reduction = Some((*key, lin));
            }
            "delta-sum" => {
                delta_sum = Some(arg(line, &toks, 2, "Delta sum")?.u64("Delta sum")?);
                no_more(&toks, 3)?;
            }
            "target" => {
                target = Some(arg(line, &toks, 2, "target value")?.u64("target value")?);
                no_more(&toks, 3)?;
            }
            "role" => roles.push(*key),
            _ => {}
        }
    }
    let (key, mut lineage) =
        reduction.ok_or_else(|| end_of_input(text, "`c reduction` trailer line"))?;
    let target = target.ok_or_else(|| end_of_input(text, "`c target` trailer line"))?;
    if lineage.kind == ReductionKind::Perm4 {
        lineage.delta_sum =
            Some(delta_sum.ok_or_else(|| end_of_input(text, "`c delta-sum` trailer line"))?);
    }
    if lineage.num_elements() != instance.num_vars() {
        return Err(key.err(format!(
            "a reduction with {} elements",
            instance.num_vars()
        )));
    }

    let expected = lineage.roles();
    if roles.len() != expected.len() {
        return Err(end_of_input(
            text,
            format!("{} role lines, got {}", expected.len(), roles.len()),
        ));
    }
    for (pos, (key, role)) in roles.iter().zip(&expected).enumerate() {
        let line = all.iter().find(|l| l.no == key.line).expect("role line");
        let toks = line.tokens();
        let e = arg(line, &toks, 2, "element")?;
        let tag = arg(line, &toks, 3, "role tag")?;
        let idx = arg(line, &toks, 4, "role index")?;
        no_more(&toks, 5)?;
        if e.uint("element")? != pos + 1 {
            return Err(e.err(format!("element {}", pos + 1)));
        }
        if tag.text.len() != 1 || tag.text.chars().next() != Some(role.tag()) {
            return Err(tag.err(format!("role `{}`", role.tag())));
        }
        if idx.uint("role index")? != role.index() + 1 {
            return Err(idx.err(format!("index {}", role.index() + 1)));
        }
    }

    Ok(ReductionCertificate {
        instance,
        target,
        lineage,
    })
}
