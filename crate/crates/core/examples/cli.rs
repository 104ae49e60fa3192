//! The command-line front end driven in-process, as the `oblige` binary would run it.

use std::fmt::Write as _;

use oblige::cli::run as oblige;

fn call(args: &[&str]) -> (i32, String) {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let mut argv = vec!["oblige"];
    argv.extend_from_slice(args);
    let code = oblige(argv, &mut out, &mut err);
    (code, String::from_utf8_lossy(&out).into_owned() + &String::from_utf8_lossy(&err))
}

pub fn run() -> String {
    let mut out = String::new();
    for args in [
        &["solve", "ex1"][..],
        &["solve", "ex1", "--engine", "prior"],
        &["gen", "--seed", "7", "--nodes", "3", "--colors", "2"],
        &["selftest", "--count", "30"],
        &["solve", "no-such-file.oblige"],
    ] {
        let (code, text) = call(args);
        writeln!(out, "$ oblige {}   (exit {code})", args.join(" ")).unwrap();
        for line in text.lines() {
            writeln!(out, "  {line}").unwrap();
        }
    }
    out
}

#[allow(dead_code)]
fn main() {
    print!("{}", run());
}
