//! Built-in scenarios.

use clap::ValueEnum;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Preset {
    /// Watch-time-led weights (1, 2, 1.5), delta 1.
    Example1,
    /// Same weights, stricter sponsors: delta 2.5.
    Example2,
    /// Clicks-and-shares-led weights (2.5, 0.5, 2), delta 1.
    Example3,
    /// Short-form platform rewarding clicks and shares.
    TiktokLike,
    /// Long-form platform rewarding watch time.
    YoutubeLike,
}

impl Preset {
    pub fn json(self) -> &'static str {
        match self {
            Preset::Example1 => {
                r#"{"weights": {"alpha": 1.0, "beta": 2.0, "gamma": 1.5}, "creator": {"delta": 1.0, "model": "linear"}}"#
            }
            Preset::Example2 => {
                r#"{"weights": {"alpha": 1.0, "beta": 2.0, "gamma": 1.5}, "creator": {"delta": 2.5, "model": "linear"}}"#
            }
            Preset::Example3 => {
                r#"{"weights": {"alpha": 2.5, "beta": 0.5, "gamma": 2.0}, "creator": {"delta": 1.0, "model": "linear"}}"#
            }
            Preset::TiktokLike => {
                r#"{"weights": {"alpha": 2.0, "beta": 0.25, "gamma": 2.0}, "creator": {"delta": 0.5, "model": "linear"}}"#
            }
            Preset::YoutubeLike => {
                r#"{"weights": {"alpha": 0.5, "beta": 2.5, "gamma": 1.0}, "creator": {"delta": 1.0, "model": "linear"}}"#
            }
        }
    }
}
