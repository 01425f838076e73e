use std::io;

use orbifold_degree::cli::{run, ENUM_CAP_ENV};

fn main() {
    let code = run(
        std::env::args_os(),
        std::env::var(ENUM_CAP_ENV).ok(),
        &mut io::stdout().lock(),
        &mut io::stderr().lock(),
    );
    std::process::exit(code);
}
