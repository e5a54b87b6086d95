//! Drive the library through the batch language and print both renderings.
//!
//! cargo run --example session

use qborel::session::{execute, parse_session, render, Config, Format};

const SCRIPT: &str = "
vars x y z;
poset Y = y;
ideal I = Q(y*z);
ideal J = I + (z^3);
cmd close J;
cmd qgens J;
cmd resolve y I;
cmd verify last exactness;
cmd betti last;
cmd irreducible J;
";

fn main() {
    let session = match parse_session(SCRIPT) {
        Ok(s) => s,
        Err(e) => {
            eprintln!("parse error: {e}");
            std::process::exit(2);
        }
    };
    let exec = execute(&session, &Config::default());
    print!("{}", render(&exec, Format::Text));
    println!();
    print!("{}", render(&exec, Format::Json));
    if exec.error.is_some() {
        std::process::exit(1);
    }
}
