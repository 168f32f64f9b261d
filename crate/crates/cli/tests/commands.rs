use std::path::Path;
use std::process::{Command, Output};

fn ncgb(args: &[&str], dir: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ncgb")).args(args).current_dir(dir).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn result_lines(o: &Output) -> Vec<String> {
    stdout(o).lines().filter(|l| l.starts_with("RESULT:")).map(str::to_string).collect()
}

#[test]
fn analyze_sample_is_decoupled() {
    let dir = tempfile::tempdir().unwrap();
    let o = ncgb(&["analyze", "kuukukku", "--out", "r.txt"], dir.path());
    assert_eq!(o.status.code(), Some(0));
    assert!(result_lines(&o)[0].contains("verdict=formally-decoupled-weak"));
    let report = std::fs::read_to_string(dir.path().join("r.txt")).unwrap();
    assert!(report.contains("# verdict: formally-decoupled-weak"));
    assert!(String::from_utf8_lossy(&o.stderr).contains("# ncgb"));
}

#[test]
fn analyze_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let su = ncgb(&["analyze", "uuukkkkkkkkukuukku"], dir.path());
    assert_eq!(su.status.code(), Some(2));
    assert!(stdout(&su).contains("# strongly-undetermined: true"));
    assert!(stdout(&su).contains("# iterations: 0"));
    assert_eq!(ncgb(&["analyze", ""], dir.path()).status.code(), Some(1));
    assert_eq!(ncgb(&["analyze", "kuk"], dir.path()).status.code(), Some(1));
    assert_eq!(ncgb(&["no-such-command"], dir.path()).status.code(), Some(1));
}

#[test]
fn analyze_accepts_grids() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(dir.path().join("g.txt"), "ku\nuk\n\nuk\nku\n").unwrap();
    let o = ncgb(&["analyze", "--config-grid", "g.txt"], dir.path());
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("# configuration: kuukukku"));
}

#[test]
fn latex_of_sample_report() {
    let dir = tempfile::tempdir().unwrap();
    assert!(ncgb(&["analyze", "--problem", "sample", "--out", "s.txt"], dir.path()).status.success());
    let o = ncgb(&["emit-latex", "--report", "s.txt"], dir.path());
    assert!(o.status.success());
    let tex = stdout(&o);
    assert!(tex.contains("u_4 k_2 u_4"));
    assert!(tex.contains("k_1^{-1}"));
    assert!(tex.ends_with("\\end{document}\n"));
}

#[test]
fn gb_reduce_smallbasis() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(dir.path().join("g.poly"), "# idempotent\nx*x - x\n").unwrap();
    std::fs::write(dir.path().join("p.poly"), "x*x*x - x\ny*x*x - y*x\ny*x*x\n").unwrap();
    let o = ncgb(&["gb", "--order", "x<y", "--order-kind", "graded-lex", "--in", "g.poly"], dir.path());
    assert!(o.status.success());
    assert_eq!(stdout(&o).lines().next(), Some("x*x - x"));
    assert!(result_lines(&o)[0].contains("closed=true"));

    let o = ncgb(&["reduce", "--order", "x<y", "--rules", "g.poly", "--in", "p.poly"], dir.path());
    assert!(o.status.success());
    assert_eq!(stdout(&o).lines().take(3).collect::<Vec<_>>(), ["0", "0", "y*x"]);
    assert_eq!(result_lines(&o), ["RESULT: zero=2 nonzero=1"]);

    std::fs::write(dir.path().join("s.poly"), "1\nx\nx*x\nx*x*x\n").unwrap();
    let o = ncgb(&["smallbasis", "--order", "x", "--in", "s.poly"], dir.path());
    assert_eq!(stdout(&o).lines().next(), Some("1"));
    assert!(result_lines(&o)[0].contains("kept=1"));

    let o = ncgb(&["gb", "--in", "g.poly"], dir.path());
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn inverses_are_inserted() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(dir.path().join("g.poly"), "a*Inv[a] - 1\nInv[a]*a - 1\n").unwrap();
    std::fs::write(dir.path().join("p.poly"), "a*b*Inv[a]*a - a*b\n").unwrap();
    let o = ncgb(&["reduce", "--order", "a<b", "--rules", "g.poly", "--in", "p.poly"], dir.path());
    assert_eq!(result_lines(&o), ["RESULT: zero=1 nonzero=0"]);
}

#[test]
fn theorem2_both_directions() {
    let dir = tempfile::tempdir().unwrap();
    let o = ncgb(&["theorem2"], dir.path());
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("RESULT: theorem2 forward pass"));
    let o = ncgb(&["theorem2", "--direction", "converse"], dir.path());
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(result_lines(&o).len(), 19);
    let o = ncgb(&["theorem2", "--direction", "converse", "--iters", "2"], dir.path());
    assert_eq!(o.status.code(), Some(2));
    assert!(stdout(&o).contains("failed"));
}

#[test]
fn survey_small_and_reproducible() {
    let dir = tempfile::tempdir().unwrap();
    let a = ncgb(&["survey", "--n", "2", "--unknowns", "4", "--full", "--jobs", "2"], dir.path());
    assert!(a.status.success());
    assert!(stdout(&a).contains("RESULT: n=2 unknowns=4 classes=22 configurations=70"));
    let b = ncgb(&["survey", "--n", "2", "--unknowns", "4", "--full", "--jobs", "1"], dir.path());
    assert_eq!(a.stdout, b.stdout);
    let z = ncgb(&["survey", "--n", "2", "--unknowns", "4", "--sample", "0"], dir.path());
    let rows: Vec<_> = stdout(&z).lines().filter(|l| !l.starts_with("RESULT:")).map(str::to_string).collect();
    assert_eq!(rows.len(), 1);
    assert!(rows[0].starts_with("# index"));
}

#[test]
fn numeric_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    let h = ncgb(&["numeric", "harvest", "--problem", "central", "--m", "2", "--seed", "3", "--out", "c.mat", "--unknowns-out", "cu.mat"], d);
    assert!(h.status.success());
    let again = ncgb(&["numeric", "harvest", "--problem", "central", "--m", "2", "--seed", "3"], d);
    assert_eq!(std::fs::read(d.join("c.mat")).unwrap(), again.stdout.split(|&b| b == b'R').next().unwrap());
    let t = ncgb(&["numeric", "theorem2", "--blocks", "c.mat", "--out", "sol.mat"], d);
    assert_eq!(t.status.code(), Some(0), "{}", stdout(&t));
    assert!(result_lines(&t)[0].starts_with("RESULT: pass"));

    let text = std::fs::read_to_string(d.join("c.mat")).unwrap();
    let mut lines: Vec<String> = text.lines().map(str::to_string).collect();
    let j = lines.iter().position(|l| l == "j:").unwrap();
    lines[j + 1] = lines[j + 1].split_whitespace().map(|v| (v.parse::<f64>().unwrap() + 1.0).to_string()).collect::<Vec<_>>().join(" ");
    std::fs::write(d.join("bad.mat"), lines.join("\n")).unwrap();
    let t = ncgb(&["numeric", "theorem2", "--blocks", "bad.mat"], d);
    assert_eq!(t.status.code(), Some(2));
    assert!(stdout(&t).contains("RESULT: fail"));

    std::fs::write(d.join("broken.mat"), "m=2\na:\n1 2\n").unwrap();
    assert_eq!(ncgb(&["numeric", "theorem2", "--blocks", "broken.mat"], d).status.code(), Some(1));
}

#[test]
fn numeric_backsolve_from_report() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    let cfg = "kukukukukukkkukkku";
    assert!(ncgb(&["analyze", cfg, "--out", "r.txt"], d).status.success());
    assert!(ncgb(&["numeric", "harvest", "--config", cfg, "--m", "3", "--seed", "8", "--out", "k.mat"], d).status.success());
    let o = ncgb(&["numeric", "backsolve", "--report", "r.txt", "--blocks", "k.mat"], d);
    assert_eq!(o.status.code(), Some(0), "{}{}", stdout(&o), String::from_utf8_lossy(&o.stderr));
    assert!(stdout(&o).contains("u7:"));
}
