use std::collections::BTreeMap;

use serde_json::{json, Value};

use latinpoly::groebner::{
    build_ideal_lpp, build_ideal_lpp_degree, build_ideal_pp_degree, normalized_pp_count, quotient_dimension,
    reduced_groebner_basis, variety, IdealKind, OrderKind, DEFAULT_PAIR_BUDGET,
};
use latinpoly::lpp::{
    are_isotopic, complete_mappings as all_complete_mappings, conjugates as all_conjugates, is_totally_symmetric,
    isotopism_classes, least_zero, lpp_census, reduce_lpp, transversals as all_transversals, Isotopism, LatinSquare,
    ROLE_PERMUTATIONS,
};
use latinpoly::pp::degree_census;
use latinpoly::{BiPoly, Budget, Elem, Error, Field, Result};

use crate::report::{Outcome, Table};
use crate::tables::{Q8_BELOW_SIX, Q8_BELOW_SIX_EARLIER, TABLE_1, TABLE_2};
use crate::{Census, CmdResult, CountPp, Groebner, Isotopic, Method, Order, PolyArgs, Reduce, Transversals, VerifyTables};

/// Largest q handled by the Gröbner count without `--allow-large`.
const GROEBNER_PP_LIMIT: usize = 8;
/// Largest variety listed in a Gröbner report.
const VARIETY_LISTING_LIMIT: u64 = 1024;

fn field(q: usize) -> Result<Field> {
    Field::new(q)
}

fn counts_json(counts: &BTreeMap<usize, u64>) -> Value {
    Value::Object(counts.iter().map(|(d, c)| (d.to_string(), json!(c))).collect())
}

fn counts_table(counts: &BTreeMap<usize, u64>) -> Table {
    let mut t = Table::new(vec!["degree", "count"]);
    for (d, c) in counts {
        t.push(vec![d.to_string(), c.to_string()]);
    }
    t
}

fn square_json(s: &LatinSquare) -> Value {
    let q = s.order();
    json!(s.cells().chunks(q).map(|r| r.iter().map(|e| e.code()).collect::<Vec<_>>()).collect::<Vec<_>>())
}

fn isotopism_json(f: &Field, iso: &Isotopism) -> Value {
    let [h1, h2, h3] = iso.to_polys(f);
    json!({ "h1": h1.to_string(), "h2": h2.to_string(), "h3": h3.to_string() })
}

fn brute_counts(f: &Field, large: bool) -> Result<BTreeMap<usize, u64>> {
    let budget = if large { Budget::Large } else { Budget::Standard };
    Ok(degree_census(f, budget)?.counts)
}

fn groebner_count(f: &Field, d: usize, normalized: bool) -> Result<u64> {
    if normalized {
        normalized_pp_count(f, d)
    } else {
        quotient_dimension(&reduced_groebner_basis(&build_ideal_pp_degree(f, d)?, DEFAULT_PAIR_BUDGET)?)
    }
}

pub fn count_pp(a: &CountPp, large: bool) -> CmdResult {
    let f = field(a.q)?;
    let q = a.q;
    if let Some(d) = a.degree {
        if d >= q {
            return Err(Error::Usage(format!("degree {d} is out of range 0..={}", q - 1)));
        }
    }
    let counts: BTreeMap<usize, u64> = match a.method {
        Method::Brute => {
            if a.normalized {
                return Err(Error::Usage("--normalized applies to --method groebner".into()));
            }
            brute_counts(&f, large)?
        }
        Method::Groebner => {
            if q > GROEBNER_PP_LIMIT && !large {
                return Err(Error::Capacity(format!(
                    "Gröbner counts for q = {q} exceed the q <= {GROEBNER_PP_LIMIT} guard (use --allow-large)"
                )));
            }
            let degrees: Vec<usize> = match a.degree {
                Some(d) => vec![d],
                None => (1..q.saturating_sub(1)).collect(),
            };
            let mut m = BTreeMap::new();
            for d in degrees {
                let n = if d == 0 || d + 1 >= q { 0 } else { groebner_count(&f, d, a.normalized)? };
                if n > 0 {
                    m.insert(d, n);
                }
            }
            m
        }
    };
    let method = match a.method {
        Method::Brute => "brute",
        Method::Groebner => "groebner",
    };
    let outcome = match a.degree {
        Some(d) => {
            let n = counts.get(&d).copied().unwrap_or(0);
            let mut t = Table::new(vec!["degree", "count"]);
            t.push(vec![d.to_string(), n.to_string()]);
            Outcome::new(Some(f.describe()), json!({ "method": method, "normalized": a.normalized, "degree": d, "count": n }))
                .with_table(t)
        }
        None => Outcome::new(
            Some(f.describe()),
            json!({
                "method": method,
                "normalized": a.normalized,
                "counts": counts_json(&counts),
                "total": counts.values().sum::<u64>(),
            }),
        )
        .with_table(counts_table(&counts)),
    };
    Ok(outcome)
}

pub fn census(a: &Census) -> CmdResult {
    let f = field(a.q)?;
    let c = lpp_census(&f)?;
    let (kind, counts) = if a.symmetric {
        ("symmetric", &c.symmetric)
    } else if a.reduced {
        ("reduced", &c.reduced)
    } else {
        ("all", &c.all)
    };
    Ok(Outcome::new(
        Some(f.describe()),
        json!({ "kind": kind, "counts": counts_json(counts), "total": counts.values().sum::<u64>() }),
    )
    .with_table(counts_table(counts)))
}

pub fn groebner(a: &Groebner, large: bool) -> CmdResult {
    let f = field(a.q)?;
    let kind: IdealKind = a.ideal.parse()?;
    if kind.is_lpp() && a.q >= 5 && !large {
        return Err(Error::Capacity(format!(
            "the {} ideal for q = {} has {} variables; use --allow-large",
            kind,
            a.q,
            (a.q - 1) * (a.q - 1)
        )));
    }
    let ideal = match (kind, a.plain) {
        (_, false) => kind.build(&f, a.degree)?,
        (IdealKind::Lpp, true) if a.degree.is_none() => build_ideal_lpp(&f, false)?,
        (IdealKind::LppDegree, true) => match a.degree {
            Some(d) => build_ideal_lpp_degree(&f, d, false)?,
            None => return Err(Error::Usage("ideal lpp-deg needs a degree".into())),
        },
        _ => return Err(Error::Usage("--plain applies to the lpp and lpp-deg ideals".into())),
    };
    let order = match a.order {
        Some(Order::Lex) => OrderKind::Lex,
        Some(Order::Degrevlex) => OrderKind::DegRevLex,
        None => kind.default_order(),
    };
    let ideal = ideal.with_order(order);
    let names = ideal.ring.names().to_vec();
    let max_pairs = a.max_pairs.unwrap_or(DEFAULT_PAIR_BUDGET);
    let head = json!({
        "ideal": kind.name(),
        "degree": a.degree,
        "order": order.to_string(),
        "variables": names,
        "generators": ideal.gens.len(),
    });
    let gb = match reduced_groebner_basis(&ideal, max_pairs) {
        Ok(gb) => gb,
        Err(Error::BudgetExceeded { pairs }) => {
            let mut result = head;
            result["complete"] = json!(false);
            result["pairs"] = json!(pairs);
            let mut o = Outcome::new(Some(f.describe()), result);
            o.exit = 4;
            return Ok(o);
        }
        Err(e) => return Err(e),
    };
    let lines = gb.lines();
    let dim = quotient_dimension(&gb)?;
    let mut result = head;
    result["complete"] = json!(true);
    result["basis"] = json!(lines);
    result["quotient_dimension"] = json!(dim);
    if dim <= VARIETY_LISTING_LIMIT {
        if let Ok(points) = variety(&gb) {
            let pts: Vec<Vec<usize>> = points.iter().map(|p| p.iter().map(|e| e.code()).collect()).collect();
            result["variety"] = json!(pts);
        }
    }
    let mut t = Table::new(vec!["index", "polynomial"]);
    for (k, l) in lines.iter().enumerate() {
        t.push(vec![k.to_string(), l.clone()]);
    }
    Ok(Outcome::new(Some(f.describe()), result).with_table(t))
}

pub fn classify(q: usize) -> CmdResult {
    let f = field(q)?;
    let classes = isotopism_classes(&f)?;
    let mut t = Table::new(vec!["class", "size", "representative_lpp"]);
    let list: Vec<Value> = classes
        .iter()
        .enumerate()
        .map(|(k, c)| {
            t.push(vec![k.to_string(), c.size().to_string(), c.representative_lpp.to_string()]);
            json!({
                "size": c.size(),
                "representative": square_json(&c.representative),
                "representative_lpp": c.representative_lpp.to_string(),
            })
        })
        .collect();
    Ok(Outcome::new(Some(f.describe()), json!({ "count": classes.len(), "classes": list })).with_table(t))
}

fn parse_point(f: &Field, s: &str) -> Result<(Elem, Elem)> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    let code = |p: &str| -> Result<Elem> {
        let n: usize = p.parse().map_err(|_| Error::Usage(format!("invalid element code {p:?}")))?;
        f.elem(n)
    };
    match parts.as_slice() {
        [a, b] => Ok((code(a)?, code(b)?)),
        _ => Err(Error::Usage(format!("expected a,b for --at, got {s:?}"))),
    }
}

pub fn reduce(a: &Reduce) -> CmdResult {
    let f = field(a.q)?;
    let p = BiPoly::parse(&f, &a.poly)?;
    let (x, y) = match &a.at {
        Some(s) => parse_point(&f, s)?,
        None => least_zero(&f, &p).ok_or_else(|| Error::Domain(format!("{p} has no zero")))?,
    };
    let (rho, witness) = reduce_lpp(&f, &p, x, y)?;
    Ok(Outcome::new(
        Some(f.describe()),
        json!({
            "input": p.to_string(),
            "at": [x.code(), y.code()],
            "reduced": rho.to_string(),
            "witness": isotopism_json(&f, &witness),
        }),
    ))
}

fn poly_list_table(polys: &[String]) -> Table {
    let mut t = Table::new(vec!["index", "polynomial"]);
    for (k, p) in polys.iter().enumerate() {
        t.push(vec![k.to_string(), p.clone()]);
    }
    t
}

pub fn complete_mappings(a: &PolyArgs) -> CmdResult {
    let f = field(a.q)?;
    let p = BiPoly::parse(&f, &a.poly)?;
    let maps: Vec<String> = all_complete_mappings(&f, &p)?.iter().map(|g| g.to_string()).collect();
    let t = poly_list_table(&maps);
    Ok(Outcome::new(
        Some(f.describe()),
        json!({ "polynomial": p.to_string(), "count": maps.len(), "complete_mappings": maps }),
    )
    .with_table(t))
}

pub fn transversals(a: &Transversals) -> CmdResult {
    let src = std::fs::read_to_string(&a.square)
        .map_err(|e| Error::Usage(format!("cannot read {}: {e}", a.square.display())))?;
    let square = LatinSquare::parse(&src)?;
    let ts = all_transversals(&square)?;
    let mut t = Table::new(vec!["transversal", "row", "column", "symbol"]);
    let list: Vec<Value> = ts
        .iter()
        .enumerate()
        .map(|(k, tr)| {
            for (r, c, s) in tr.cells() {
                t.push(vec![k.to_string(), r.to_string(), c.to_string(), s.to_string()]);
            }
            json!(tr.cells().iter().map(|(r, c, s)| [r.code(), c.code(), s.code()]).collect::<Vec<_>>())
        })
        .collect();
    Ok(Outcome::new(None, json!({ "order": square.order(), "count": ts.len(), "transversals": list })).with_table(t))
}

pub fn isotopic(a: &Isotopic) -> CmdResult {
    let fld = field(a.q)?;
    let f = BiPoly::parse(&fld, &a.f)?;
    let g = BiPoly::parse(&fld, &a.g)?;
    let found = are_isotopic(&fld, &f, &g)?;
    Ok(Outcome::new(
        Some(fld.describe()),
        json!({
            "f": f.to_string(),
            "g": g.to_string(),
            "isotopic": found.is_some(),
            "witness": found.map(|iso| isotopism_json(&fld, &iso)),
        }),
    ))
}

pub fn conjugates(a: &PolyArgs) -> CmdResult {
    let f = field(a.q)?;
    let p = BiPoly::parse(&f, &a.poly)?;
    let cs = all_conjugates(&f, &p)?;
    let mut t = Table::new(vec!["roles", "polynomial"]);
    let list: Vec<Value> = ROLE_PERMUTATIONS
        .iter()
        .zip(&cs)
        .map(|(r, c)| {
            t.push(vec![r.iter().map(|k| k.to_string()).collect(), c.to_string()]);
            json!({ "roles": r, "polynomial": c.to_string() })
        })
        .collect();
    Ok(Outcome::new(
        Some(f.describe()),
        json!({ "polynomial": p.to_string(), "conjugates": list, "totally_symmetric": is_totally_symmetric(&f, &p)? }),
    )
    .with_table(t))
}

struct Cell {
    q: usize,
    degree: Option<usize>,
    column: &'static str,
    published: Option<u64>,
    computed: Option<u64>,
    status: &'static str,
}

impl Cell {
    fn compare(q: usize, degree: Option<usize>, column: &'static str, published: Option<u64>, computed: u64) -> Cell {
        let status = if published == Some(computed) { "PASS" } else { "FAIL" };
        Cell { q, degree, column, published, computed: Some(computed), status }
    }

    fn json(&self) -> Value {
        json!({
            "q": self.q,
            "degree": self.degree,
            "column": self.column,
            "published": self.published,
            "computed": self.computed,
            "status": self.status,
        })
    }
}

fn table_1_cells(large: bool) -> Result<(Vec<Cell>, Vec<String>)> {
    let mut cells = Vec::new();
    let mut notes = Vec::new();
    let mut qs: Vec<usize> = TABLE_1.iter().map(|c| c.0).collect();
    qs.dedup();
    for q in qs {
        let published: BTreeMap<usize, u64> = TABLE_1.iter().filter(|c| c.0 == q).map(|c| (c.1, c.2)).collect();
        let skip = q > 11 || (q == 11 && !large);
        if skip {
            for (&d, &n) in &published {
                cells.push(Cell { q, degree: Some(d), column: "N", published: Some(n), computed: None, status: "SKIPPED" });
            }
            notes.push(if q == 11 {
                "q = 11 needs --allow-large (11! permutations)".to_string()
            } else {
                format!("q = {q} is beyond exhaustive enumeration")
            });
            continue;
        }
        let counts = brute_counts(&field(q)?, large)?;
        for (&d, &n) in &published {
            cells.push(Cell::compare(q, Some(d), "N", Some(n), counts.get(&d).copied().unwrap_or(0)));
        }
        for (&d, &n) in counts.iter().filter(|(d, _)| !published.contains_key(d)) {
            cells.push(Cell { q, degree: Some(d), column: "N", published: None, computed: Some(n), status: "FAIL" });
        }
        if q == 8 {
            let below = counts.range(..6).map(|(_, c)| c).sum::<u64>();
            cells.push(Cell::compare(8, None, "N(d<6)", Some(Q8_BELOW_SIX), below));
            notes.push(format!(
                "q = 8, degree below six: computed {below}; published {Q8_BELOW_SIX}, earlier literature {Q8_BELOW_SIX_EARLIER}"
            ));
        }
    }
    Ok((cells, notes))
}

fn table_2_cells() -> Result<(Vec<Cell>, Vec<String>)> {
    let mut cells = Vec::new();
    let mut notes = Vec::new();
    for q in [4usize, 5] {
        let c = lpp_census(&field(q)?)?;
        let rows: Vec<_> = TABLE_2.iter().filter(|r| r.0 == q).collect();
        for &&(_, d, all, sym, red) in &rows {
            cells.push(Cell::compare(q, Some(d), "LP", Some(all), c.all.get(&d).copied().unwrap_or(0)));
            cells.push(Cell::compare(q, Some(d), "SLP", Some(sym), c.symmetric.get(&d).copied().unwrap_or(0)));
            if let Some(r) = red {
                cells.push(Cell::compare(q, Some(d), "RLP", Some(r), c.reduced.get(&d).copied().unwrap_or(0)));
            }
        }
        for d in c.degrees().into_iter().filter(|d| !rows.iter().any(|r| r.1 == *d)) {
            cells.push(Cell {
                q,
                degree: Some(d),
                column: "LP",
                published: None,
                computed: Some(c.all.get(&d).copied().unwrap_or(0)),
                status: "FAIL",
            });
        }
        let published_sum: u64 = rows.iter().map(|r| r.2).sum();
        let fact: u64 = (1..=q as u64).product();
        let expected = fact * (fact / q as u64) * c.total_reduced();
        cells.push(Cell::compare(q, None, "LP total", Some(published_sum), c.total()));
        if published_sum != c.total() {
            let diffs: Vec<String> = rows
                .iter()
                .filter(|r| c.all.get(&r.1).copied().unwrap_or(0) != r.2)
                .map(|r| format!("d = {}: published {}, computed {}", r.1, r.2, c.all.get(&r.1).copied().unwrap_or(0)))
                .collect();
            notes.push(format!(
                "q = {q}: published LP column sums to {published_sum}, but |LP_{q}| = q!(q-1)!|RLP_{q}| = {expected}; \
                 the census total is {} ({})",
                c.total(),
                diffs.join("; ")
            ));
        }
    }
    Ok((cells, notes))
}

pub fn verify_tables(a: &VerifyTables, large: bool) -> CmdResult {
    let (cells, notes) = if a.table == 1 { table_1_cells(large)? } else { table_2_cells()? };
    let count = |s: &str| cells.iter().filter(|c| c.status == s).count();
    let summary = json!({ "pass": count("PASS"), "fail": count("FAIL"), "skipped": count("SKIPPED") });
    let mut t = Table::new(vec!["q", "degree", "column", "published", "computed", "status"]);
    let opt = |v: Option<u64>| v.map(|n| n.to_string()).unwrap_or_default();
    for c in &cells {
        t.push(vec![
            c.q.to_string(),
            c.degree.map(|d| d.to_string()).unwrap_or_default(),
            c.column.to_string(),
            opt(c.published),
            opt(c.computed),
            c.status.to_string(),
        ]);
    }
    for c in &cells {
        eprintln!(
            "{} table {} q={} d={} {}: published {} computed {}",
            c.status,
            a.table,
            c.q,
            c.degree.map(|d| d.to_string()).unwrap_or_else(|| "-".into()),
            c.column,
            opt(c.published),
            opt(c.computed)
        );
    }
    Ok(Outcome::new(
        None,
        json!({
            "table": a.table,
            "cells": cells.iter().map(Cell::json).collect::<Vec<_>>(),
            "summary": summary,
            "notes": notes,
        }),
    )
    .with_table(t))
}
