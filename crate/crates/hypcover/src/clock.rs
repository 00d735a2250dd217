use std::time::{Duration, Instant};

use hypcover_core::Monitor;

/// Wall-clock [`Monitor`] with an optional deadline.
#[derive(Debug, Clone, Copy)]
pub struct WallClock {
    start: Instant,
    limit: Option<Duration>,
}

impl WallClock {
    pub fn new(limit: Option<Duration>) -> Self {
        WallClock {
            start: Instant::now(),
            limit,
        }
    }

    pub fn unlimited() -> Self {
        WallClock::new(None)
    }
}

impl Monitor for WallClock {
    fn should_stop(&self) -> bool {
        self.limit.is_some_and(|l| self.start.elapsed() >= l)
    }

    fn elapsed_secs(&self) -> f64 {
        self.start.elapsed().as_secs_f64()
    }
}
