#![allow(dead_code)]

pub struct Output {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

pub fn basex(args: &[&str]) -> Output {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("basex").chain(args.iter().copied());
    let code = basex_cli::run(argv, &mut out, &mut err);
    Output {
        code,
        stdout: String::from_utf8(out).unwrap(),
        stderr: String::from_utf8(err).unwrap(),
    }
}

/// Stdout of a command expected to succeed, without the trailing newline.
pub fn ok(args: &[&str]) -> String {
    let o = basex(args);
    assert_eq!(o.code, 0, "basex {args:?} failed: {}", o.stderr);
    o.stdout.trim_end().to_string()
}
