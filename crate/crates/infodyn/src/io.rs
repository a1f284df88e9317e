//! CSV/JSON io (placeholder).
