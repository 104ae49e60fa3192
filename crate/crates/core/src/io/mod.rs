//! Reading, writing and generating games.

mod fixtures;
mod format;
mod random;

pub use fixtures::{fixture, fixture_text, UnknownFixture, FIXTURE_NAMES};
pub use format::{normalize, parse_game, serialize_game, ParseError, ParseErrorKind, FORMAT_VERSION};
pub use random::{random_game, ObjectiveClass, RandomGameError};
