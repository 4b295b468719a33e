//! Theorem checks (stub).

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CheckStatus {
    Pass,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Tier {
    Default,
}

#[derive(Clone, Debug)]
pub struct TheoremCheck;

#[derive(Clone, Debug)]
pub struct ClassificationRow;
