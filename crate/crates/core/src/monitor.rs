//! Hooks through which a caller with a clock can time stages and stop
//! long-running searches. The core itself has no notion of time.

pub trait Monitor {
    /// Polled between units of work; returning `true` aborts with
    /// [`Error::Interrupted`](crate::Error::Interrupted).
    fn should_stop(&self) -> bool {
        false
    }

    /// Seconds since some fixed reference point; used for stage timings.
    fn elapsed_secs(&self) -> f64 {
        0.0
    }
}

/// Never stops, reports zero time.
#[derive(Debug, Clone, Copy, Default)]
pub struct Unbounded;

impl Monitor for Unbounded {}
