//! Batch verification runner over the identity-check registry.
//!
//! `glhat run [flags]` executes every selected check for every (rank,
//! parameter point) combination; `glhat list-checks` prints the registry.
//! The exit code is zero exactly when no check fails or errors; skipped
//! checks do not fail the run.

use std::io::Write;
use std::process::ExitCode;

mod config;
mod output;
mod runner;

/// Prints to stdout, treating a closed pipe as a clean stop.
fn emit(text: &str) {
    let mut stdout = std::io::stdout().lock();
    if stdout.write_all(text.as_bytes()).is_err() {
        std::process::exit(0);
    }
    let _ = stdout.flush();
}

use config::{parse_config_file, ConfigInvalid, RawSettings, KNOWN_KEYS};

const USAGE: &str = "\
usage: glhat <command> [flags]

commands:
  run            execute checks (default when flags are given directly)
  list-checks    print the check registry

flags (also accepted as `key = value` lines in --config files):
  --n LIST           comma-separated ranks, each >= 3      [3,4,5]
  --params LIST      parameter points 'e1,e2;e1,e2;...'    [1/2,1/3;2/3,5/7;-3/5,7/11]
  --trunc S          truncation cutoff                     [12]
  --guard G          window guard                          [4]
  --m-max M          largest loop multiplicity             [3]
  --s-range LO,HI    loop-degree sweep range               [-4,4]
  --checks LIST      check ids or 'all'                    [all]
  --jobs J           worker threads                        [available parallelism]
  --format F         json | tap | text                     [text]
  --seed U64         seed for randomized suites            [1592641230]
  --g2-fixture PATH  optional order-6 generator fixture
  --config PATH      flat key=value settings file (flags override)
";

fn parse_flags(args: &[String]) -> Result<RawSettings, ConfigInvalid> {
    let mut file_settings = RawSettings::default();
    let mut flag_settings = RawSettings::default();
    let mut idx = 0;
    while idx < args.len() {
        let arg = &args[idx];
        let Some(key) = arg.strip_prefix("--") else {
            return Err(ConfigInvalid(format!("unexpected argument {arg:?}")));
        };
        let (key, value) = match key.split_once('=') {
            Some((k, v)) => (k.to_owned(), v.to_owned()),
            None => {
                idx += 1;
                let Some(value) = args.get(idx) else {
                    return Err(ConfigInvalid(format!("flag --{key} needs a value")));
                };
                (key.to_owned(), value.clone())
            }
        };
        if key == "config" {
            let text = std::fs::read_to_string(&value)
                .map_err(|e| ConfigInvalid(format!("cannot read config {value:?}: {e}")))?;
            file_settings = parse_config_file(&text)?;
        } else if KNOWN_KEYS.contains(&key.as_str()) {
            flag_settings.set(&key, &value);
        } else {
            return Err(ConfigInvalid(format!("unknown flag --{key}")));
        }
        idx += 1;
    }
    // flags override the file: apply them last
    for (k, v) in flag_settings_entries(&flag_settings) {
        file_settings.set(&k, &v);
    }
    Ok(file_settings)
}

fn flag_settings_entries(settings: &RawSettings) -> Vec<(String, String)> {
    // RawSettings keeps insertion order; re-emit for layering
    settings.entries_for_layering()
}

fn cmd_run(args: &[String]) -> ExitCode {
    let settings = match parse_flags(args) {
        Ok(s) => s,
        Err(e) => {
            eprintln!("{e}");
            return ExitCode::from(2);
        }
    };
    let cfg = match config::resolve(&settings) {
        Ok(c) => c,
        Err(e) => {
            eprintln!("{e}");
            return ExitCode::from(2);
        }
    };
    let reports = runner::execute(&cfg);
    emit(&output::render(&reports, cfg.format));
    match output::exit_code(&reports) {
        0 => ExitCode::SUCCESS,
        _ => ExitCode::FAILURE,
    }
}

fn cmd_list_checks() -> ExitCode {
    let mut text = String::new();
    for def in glhat::checks::registry() {
        text.push_str(&format!("{} — {}\n", def.id, def.summary));
    }
    emit(&text);
    ExitCode::SUCCESS
}

fn main() -> ExitCode {
    let args: Vec<String> = std::env::args().skip(1).collect();
    match args.first().map(String::as_str) {
        None => {
            eprint!("{USAGE}");
            ExitCode::from(2)
        }
        Some("run") => cmd_run(&args[1..]),
        Some("list-checks") => cmd_list_checks(),
        Some("--help" | "-h" | "help") => {
            print!("{USAGE}");
            ExitCode::SUCCESS
        }
        // bare flags mean `run`
        Some(flag) if flag.starts_with("--") => cmd_run(&args),
        Some(other) => {
            eprintln!("unknown command {other:?}\n");
            eprint!("{USAGE}");
            ExitCode::from(2)
        }
    }
}
