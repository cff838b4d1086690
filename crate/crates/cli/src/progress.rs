use std::time::{Duration, Instant};

const EVERY: Duration = Duration::from_secs(5);

/// Rate-limited progress lines on standard error.
pub struct Progress {
    label: &'static str,
    last: Instant,
}

impl Progress {
    pub fn new(label: &'static str) -> Self {
        Progress { label, last: Instant::now() }
    }

    pub fn tick(&mut self, msg: impl FnOnce() -> String) {
        if self.last.elapsed() >= EVERY {
            eprintln!("{}: {}", self.label, msg());
            self.last = Instant::now();
        }
    }
}
