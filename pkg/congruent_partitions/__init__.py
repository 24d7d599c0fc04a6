import congruent_partitions
