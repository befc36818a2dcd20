pub mod kinds {}
