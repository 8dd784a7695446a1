//! Instance files and the `dalg` command line, driven through the library entry point.

use double_algebra::cli::run;

fn main() {
    let dir = std::env::temp_dir().join("dalg-example");
    std::fs::create_dir_all(&dir).expect("temporary directory");
    let path = dir.join("s3.json");
    let path = path.to_str().expect("utf-8 path");

    for args in [
        vec!["dalg", "construct", "hopf-group", "--group", "s3", "--out", path],
        vec!["dalg", "check", path, "--suite", "axioms", "--suite", "antipode"],
        vec!["dalg", "report", path, "--field", "Fp:3"],
    ] {
        println!("$ {}", args[1..].join(" "));
        let out = run(args);
        print!("{}{}", out.stdout, out.stderr);
        println!("(exit {})\n", out.code);
    }
}
