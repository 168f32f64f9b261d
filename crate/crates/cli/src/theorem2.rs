use std::fmt::Write;
use std::time::Instant;

use anyhow::Result;
use ncgb::completion::inverse_relations;
use ncgb::fixtures::{central_answer, central_order, central_relations, CENTRAL_ANSWER};
use ncgb::groebner::{make_partial_gb_with, GbOptions};
use ncgb::{OrderKind, Polynomial};

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Direction {
    /// Certify the nine solution relations from the original relations.
    Forward,
    /// Certify the original relations from the nine solution relations.
    Converse,
}

/// Returns the table and whether every relation was certified.
pub fn run(direction: Direction, max_iters: usize, max_degree: Option<usize>, deadline: Option<Instant>) -> Result<(String, bool)> {
    let (order, gens, targets, labels): (_, Vec<Polynomial>, Vec<Polynomial>, Vec<String>) = match direction {
        Direction::Forward => {
            let o = central_order(OrderKind::MultiGradedLex);
            let gens = central_relations(&o).all();
            let labels = CENTRAL_ANSWER.iter().map(|s| s.to_string()).collect();
            (o.clone(), gens, central_answer(&o), labels)
        }
        Direction::Converse => {
            let o = central_order(OrderKind::GradedLex);
            let rel = central_relations(&o);
            let mut gens = central_answer(&o);
            gens.extend(inverse_relations(&o, &rel.matrices.knowns()));
            let labels = rel.products.iter().map(|p| p.to_string()).collect();
            (o.clone(), gens, rel.products.clone(), labels)
        }
    };
    let mut found: Vec<Option<usize>> = vec![None; targets.len()];
    for k in 1..=max_iters {
        if found.iter().all(Option::is_some) {
            break;
        }
        let mut opts = GbOptions::new(k);
        opts.max_degree = max_degree;
        opts.deadline = deadline;
        let basis = make_partial_gb_with(&gens, &order, &opts)?;
        for (slot, t) in found.iter_mut().zip(&targets) {
            if slot.is_none() && basis.certifies(t) {
                *slot = Some(k);
            }
        }
        if basis.aborted() {
            break;
        }
    }
    let mut out = String::new();
    for (i, (slot, label)) in found.iter().zip(&labels).enumerate() {
        match slot {
            Some(k) => writeln!(out, "RESULT: relation {} certified-at={k} {label}", i + 1)?,
            None => writeln!(out, "RESULT: relation {} failed {label}", i + 1)?,
        }
    }
    let ok = found.iter().all(Option::is_some);
    let worst = found.iter().flatten().max().copied().unwrap_or(0);
    let name = match direction {
        Direction::Forward => "forward",
        Direction::Converse => "converse",
    };
    writeln!(out, "RESULT: theorem2 {name} {} iterations={worst}", if ok { "pass" } else { "fail" })?;
    Ok((out, ok))
}
