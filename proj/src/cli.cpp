namespace symhyp {}
