// Each chapter of book/ becomes a module docstring so that `cargo test --doc`
// runs its code blocks.

#[doc = include_str!("../../../book/src/ch1.md")]
pub mod chapter1 {}
#[doc = include_str!("../../../book/src/ch2.md")]
pub mod chapter2 {}
#[doc = include_str!("../../../book/src/ch3.md")]
pub mod chapter3 {}
#[doc = include_str!("../../../book/src/ch4.md")]
pub mod chapter4 {}
#[doc = include_str!("../../../book/src/ch5.md")]
pub mod chapter5 {}
#[doc = include_str!("../../../book/src/ch6.md")]
pub mod chapter6 {}
