// oracle module, written later
