"""Print the c^i_mn table for m + n <= 3 as (m n i re im) lines, im the xi-coordinate."""

from orbicheck import twist

print(twist.export_table(3), end="")
