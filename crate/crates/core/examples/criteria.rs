//! Runs the acceptance criteria 1-10 and prints one line each.
fn main() {
    let seed = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(1);
    for o in powid_core::verify::run_all(seed) {
        println!("{o} [{:.2}s]", o.elapsed.as_secs_f64());
    }
}
