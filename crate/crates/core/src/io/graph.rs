use crate::graph::{DeltaTable, GridGraph, SimpleGraph};
use crate::io::lex::{arg, end_of_input, header, no_more, Line};
use crate::io::FormatError;

/// Parses `p edge <n> <m>` followed by `e <u> <v>` lines.
pub fn read_graph(text: &str) -> Result<SimpleGraph, FormatError> {
    let (hl, ht, body) = header(text, "edge")?;
    let n = arg(&hl, &ht, 0, "vertex count")?.uint("vertex count")?;
    let m = arg(&hl, &ht, 1, "edge count")?.uint("edge count")?;
    no_more(&ht, 2)?;
    let mut g = SimpleGraph::new(n);
    let mut seen = 0;
    for line in content(&body) {
        let toks = line.tokens();
        toks[0].expect("e")?;
        let a = arg(line, &toks, 1, "vertex")?;
        let b = arg(line, &toks, 2, "vertex")?;
        no_more(&toks, 3)?;
        let (u, v) = (a.index(n, "vertex")?, b.index(n, "vertex")?);
        if u == v {
            return Err(b.err("a vertex other than the first endpoint"));
        }
        if g.has_edge(u, v) {
            return Err(toks[0].err("no repeated edge"));
        }
        g.add_edge(u, v).expect("checked endpoints");
        seen += 1;
    }
    if seen != m {
        return Err(end_of_input(text, format!("{m} edges, got {seen}")));
    }
    Ok(g)
}

pub fn write_graph(g: &SimpleGraph) -> String {
    let edges = g.edges();
    let mut out = format!("p edge {} {}\n", g.num_vertices(), edges.len());
    for (u, v) in edges {
        out.push_str(&format!("e {} {}\n", u + 1, v + 1));
    }
    out
}

fn content<'a, 'b>(body: &'b [Line<'a>]) -> impl Iterator<Item = &'b Line<'a>> {
    body.iter().filter(|l| !l.is_blank() && !l.is_comment())
}

/// Parses `p grid <side> [D]`, edge lines `e i1 j1 i2 j2`, and an optional
/// `delta` line followed by `side` rows of `side` integers.
pub fn read_grid(text: &str) -> Result<GridGraph, FormatError> {
    let (hl, ht, body) = header(text, "grid")?;
    let side = arg(&hl, &ht, 0, "grid side")?.uint("grid side")?;
    let d = match ht.get(1) {
        Some(t) => Some(t.uint("degree bound D")?),
        None => None,
    };
    no_more(&ht, 2)?;
    let mut g = GridGraph::new(side);
    g.degree_bound = d;
    let lines: Vec<&Line> = content(&body).collect();
    let mut idx = 0;
    while idx < lines.len() {
        let line = lines[idx];
        let toks = line.tokens();
        if toks[0].text == "delta" {
            no_more(&toks, 1)?;
            let mut table = DeltaTable::zeros(side);
            for i in 0..side {
                idx += 1;
                let row = lines
                    .get(idx)
                    .ok_or_else(|| end_of_input(text, format!("{side} Delta rows")))?;
                let vals = row.tokens();
                for k in 0..side {
                    let t = arg(row, &vals, k, "Delta value")?;
                    table.set(i, k, t.u64("Delta value")?);
                }
                no_more(&vals, side)?;
            }
            g.delta_table = Some(table);
            idx += 1;
            if let Some(extra) = lines.get(idx) {
                return Err(extra.tokens()[0].err("end of input after the Delta block"));
            }
            break;
        }
        toks[0].expect("e")?;
        let mut coords = [0usize; 4];
        for (c, slot) in coords.iter_mut().enumerate() {
            *slot = arg(line, &toks, c + 1, "grid coordinate")?.index(side, "grid coordinate")?;
        }
        no_more(&toks, 5)?;
        let (a, b) = ((coords[0], coords[1]), (coords[2], coords[3]));
        if a == b {
            return Err(toks[3].err("an endpoint different from the first"));
        }
        g.add_edge(a, b).expect("checked coordinates");
        idx += 1;
    }
    Ok(g)
}

pub fn write_grid(g: &GridGraph) -> String {
    let side = g.side();
    let mut out = match g.degree_bound {
        Some(d) => format!("p grid {side} {d}\n"),
        None => format!("p grid {side}\n"),
    };
    for ((i, j), (k, l)) in g.edges() {
        out.push_str(&format!("e {} {} {} {}\n", i + 1, j + 1, k + 1, l + 1));
    }
    if let Some(t) = &g.delta_table {
        out.push_str("delta\n");
        for i in 0..side {
            let row: Vec<String> = (0..side).map(|k| t.get(i, k).to_string()).collect();
            out.push_str(&row.join(" "));
            out.push('\n');
        }
    }
    out
}
