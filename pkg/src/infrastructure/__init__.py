"""Infrastructure layer for technical concerns"""