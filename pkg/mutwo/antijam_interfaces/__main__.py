from mutwo.antijam_interfaces import main

raise SystemExit(main())
