namespace z2lab {}
