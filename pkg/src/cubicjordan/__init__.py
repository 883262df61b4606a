"""Jordan algebras of rank three, twisted cubics over them and quadro-quadric Cremona maps."""
