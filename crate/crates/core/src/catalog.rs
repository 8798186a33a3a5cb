// worked examples, written later
