//! Command-line front end: load pair and structure-constant files, run the
//! builders and checkers, emit verdict reports and fixtures.
//!
//! Commands: `check`, `construct`, `double`, `pbw`, `catalog`.
//! Global flags: `--membership-bound`, `--degree`, `--seed`, `--null-mode`,
//! `-o <file>`.
//!
//! Exit codes: 0 all checks pass, 1 at least one failure, 2 inconclusive
//! entries only, 3 structural error.

pub mod commands;
pub mod pairfile;

use std::io::Write;

pub fn run(args: &[String], out: &mut dyn Write) -> i32 {
    let Some(command) = args.first() else {
        let _ = writeln!(out, "{}", USAGE);
        return 3;
    };
    let opts = match commands::split_options(&args[1..]) {
        Ok(o) => o,
        Err(e) => {
            let _ = writeln!(out, "error: {}", e);
            return 3;
        }
    };
    match command.as_str() {
        "check" => commands::cmd_check(out, &opts),
        "construct" => commands::cmd_construct(out, &opts),
        "double" => commands::cmd_double(out, &opts),
        "pbw" => commands::cmd_pbw(out, &opts),
        "catalog" => commands::cmd_catalog(out, &opts),
        "help" | "--help" | "-h" => {
            let _ = writeln!(out, "{}", USAGE);
            0
        }
        other => {
            let _ = writeln!(out, "error: unknown command `{}`", other);
            let _ = writeln!(out, "{}", USAGE);
            3
        }
    }
}

const USAGE: &str = "\
tropical-lie: Lie pairs over commutative semirings

usage:
  tropical-lie check <pair-file> [--membership-bound N]
  tropical-lie construct <family> [args] [-o file]
      families: cross-product --c v;v;v --d v;v;v [--base B] [--c0 C]
                bilinear --n N --entries rows
                filiform [--n N] [--overrides i,j:coeffs;...]
                classical --family sl|so-odd|so-even|sp --n N --eps E
                psi-commutator [--size N] --eps E
                pre-lie --n N --product rows --eps E
                involution [--size N] [--inv transpose|jtranspose]
                krasner --table <file|f2m2> [--G list] [--eps idx]
                        [--star perm] [--ideal list]
  tropical-lie double <pair-file> [--null-mode diag|sum] [-o file]
  tropical-lie pbw <weak|preceq|eps|free> <pair-file> [--degree D]
      [--eps E] [--target <map-file>] [-o file]
  tropical-lie catalog [-o dir]

exit codes: 0 pass, 1 fail, 2 inconclusive only, 3 structural error";
