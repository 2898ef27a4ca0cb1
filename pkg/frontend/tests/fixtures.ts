// Canned API bodies captured from a live service instance (6 POI model,
// start 1, length 3, k 10). The strings are byte-for-byte what the
// service sent, so the verbatim-number assertions test the real encoding.

export const POIS_BODY =
  `{"schema_version":1,"model_version":"8cc623738bcc","pois":[{"id":1,"name":"P1","category":"museum","lat":45.25,"lon":6.6100000000000003,"popularity":33,"visits":49,"avg_duration":1847.0},{"id":2,"name":"P2","category":"park","lat":45.109999999999999,"lon":6.8300000000000001,"popularity":26,"visits":45,"avg_duration":477.0},{"id":3,"name":"P3","category":"museum","lat":44.909999999999997,"lon":7.0599999999999996,"popularity":14,"visits":22,"avg_duration":732.0},{"id":4,"name":"P4","category":"park","lat":44.600000000000001,"lon":6.6299999999999999,"popularity":3,"visits":5,"avg_duration":3597.0},{"id":5,"name":"P5","category":"museum","lat":45.119999999999997,"lon":7.2000000000000002,"popularity":10,"visits":14,"avg_duration":1231.0},{"id":6,"name":"P6","category":"park","lat":44.810000000000002,"lon":7.3799999999999999,"popularity":22,"visits":25,"avg_duration":3262.0}]}`;

export const RECOMMEND_WALKING_BODY =
  `{"schema_version":1,"model_version":"8cc623738bcc","query":{"start_poi":1,"length":3,"mode":"walking","k":10},"radar_scope":"route","truncated":false,"degenerate":{"route_totals":false,"transition_scores":false},"routes":[{"pois":[{"id":1,"name":"P1","category":"museum","lat":45.25,"lon":6.6100000000000003},{"id":5,"name":"P5","category":"museum","lat":45.119999999999997,"lon":7.2000000000000002},{"id":4,"name":"P4","category":"park","lat":44.600000000000001,"lon":6.6299999999999999}],"poi_scores":[-0.36612196829858379,1.4718382095329099,1.7535372612805302],"transition_scores":[-0.64439022155579795,-0.61725536760437594],"total":1.5976079133546823,"distance_km":121.66983617363437,"travel_time_h":24.333967234726874,"display":{"total":100.0,"poi_scores":[-2.5367291475222657,93.432898192250335,108.14189643076659],"transition_scores":[0.91286015147385591,0.93148363853704763]}},{"pois":[{"id":1,"name":"P1","category":"museum","lat":45.25,"lon":6.6100000000000003},{"id":3,"name":"P3","category":"museum","lat":44.909999999999997,"lon":7.0599999999999996},{"id":4,"name":"P4","category":"park","lat":44.600000000000001,"lon":6.6299999999999999}],"poi_scores":[-0.36612196829858379,1.159425760754472,1.7535372612805302],"transition_scores":[-0.54632970817935433,-0.53142173224690537],"total":1.469089613310159,"distance_km":100.13093896573822,"travel_time_h":20.026187793147646,"display":{"total":93.289379437934286,"poi_scores":[-2.5367291475222657,77.120190959960524,108.14189643076659],"transition_scores":[0.98016210583651897,0.99039390945755101]}},{"pois":[{"id":1,"name":"P1","category":"museum","lat":45.25,"lon":6.6100000000000003},{"id":2,"name":"P2","category":"park","lat":45.109999999999999,"lon":6.8300000000000001},{"id":5,"name":"P5","category":"museum","lat":45.119999999999997,"lon":7.2000000000000002}],"poi_scores":[-0.36612196829858379,0.77194297923972532,1.4718382095329099],"transition_scores":[-0.53391373242377305,-0.5174254348280044],"total":0.82632005322227409,"distance_km":52.285685361125005,"travel_time_h":10.457137072225001,"display":{"total":59.726979179750138,"poi_scores":[-2.5367291475222657,56.887664384535412,93.432898192250335],"transition_scores":[0.98868357288679043,1.0]}},{"pois":[{"id":1,"name":"P1","category":"museum","lat":45.25,"lon":6.6100000000000003},{"id":2,"name":"P2","category":"park","lat":45.109999999999999,"lon":6.8300000000000001},{"id":4,"name":"P4","category":"park","lat":44.600000000000001,"lon":6.6299999999999999}],"poi_scores":[-0.36612196829858379,0.77194297923972532,1.7535372612805302],"transition_scores":[-0.53391373242377305,-0.92833719445119167],"total":0.69710734534670715,"distance_km":82.09094952791331,"travel_time_h":16.418189905582661,"display":{"total":52.980099910030752,"poi_scores":[-2.5367291475222657,56.887664384535412,108.14189643076659],"transition_scores":[0.98868357288679043,0.71797858749651666]}},{"pois":[{"id":1,"name":"P1","category":"museum","lat":45.25,"lon":6.6100000000000003},{"id":3,"name":"P3","category":"museum","lat":44.909999999999997,"lon":7.0599999999999996},{"id":5,"name":"P5","category":"museum","lat":45.119999999999997,"lon":7.2000000000000002}],"poi_scores":[-0.36612196829858379,1.159425760754472,1.4718382095329099],"transition_scores":[-0.54632970817935433,-1.0732260313190531],"total":0.64558626249039053,"distance_km":77.56066991688985,"travel_time_h":15.51213398337797,"display":{"total":50.289911525374919,"poi_scores":[-2.5367291475222657,77.120190959960524,93.432898192250335],"transition_scores":[0.98016210583651897,0.61853691060965432]}},{"pois":[{"id":1,"name":"P1","category":"museum","lat":45.25,"lon":6.6100000000000003},{"id":5,"name":"P5","category":"museum","lat":45.119999999999997,"lon":7.2000000000000002},{"id":3,"name":"P3","category":"museum","lat":44.909999999999997,"lon":7.0599999999999996}],"poi_scores":[-0.36612196829858379,1.4718382095329099,1.159425760754472],"transition_scores":[-0.64439022155579795,-1.0522200701540958],"total":0.56853171027890426,"distance_km":74.260707308434178,"travel_time_h":14.852141461686836,"display":{"total":46.266485582983606,"poi_scores":[-2.5367291475222657,93.432898192250335,77.120190959960524],"transition_scores":[0.91286015147385591,0.63295394954805584]}},{"pois":[{"id":1,"name":"P1","category":"museum","lat":45.25,"lon":6.6100000000000003},{"id":5,"name":"P5","category":"museum","lat":45.119999999999997,"lon":7.2000000000000002},{"id":2,"name":"P2","category":"park","lat":45.109999999999999,"lon":6.8300000000000001}],"poi_scores":[-0.36612196829858379,1.4718382095329099,0.77194297923972532],"transition_scores":[-0.64439022155579795,-0.67311787329240458],"total":0.5601511256258489,"distance_km":77.501206553652722,"travel_time_h":15.500241310730544,"display":{"total":45.828890908330706,"poi_scores":[-2.5367291475222657,93.432898192250335,56.887664384535412],"transition_scores":[0.91286015147385591,0.89314347817130679]}},{"pois":[{"id":1,"name":"P1","category":"museum","lat":45.25,"lon":6.6100000000000003},{"id":3,"name":"P3","category":"museum","lat":44.909999999999997,"lon":7.0599999999999996},{"id":2,"name":"P2","category":"park","lat":45.109999999999999,"lon":6.8300000000000001}],"poi_scores":[-0.36612196829858379,1.159425760754472,0.77194297923972532],"transition_scores":[-0.54632970817935433,-0.59416481059821968],"total":0.42475225291803942,"distance_km":80.408180100876535,"travel_time_h":16.081636020175306,"display":{"total":38.758999235636864,"poi_scores":[-2.5367291475222657,77.120190959960524,56.887664384535412],"transition_scores":[0.98016210583651897,0.94733139988692971]}},{"pois":[{"id":1,"name":"P1","category":"museum","lat":45.25,"lon":6.6100000000000003},{"id":2,"name":"P2","category":"park","lat":45.109999999999999,"lon":6.8300000000000001},{"id":3,"name":"P3","category":"museum","lat":44.909999999999997,"lon":7.0599999999999996}],"poi_scores":[-0.36612196829858379,0.77194297923972532,1.159425760754472],"transition_scores":[-0.53391373242377305,-1.1228578590058478],"total":-0.091524819734007279,"distance_km":51.892696299893146,"travel_time_h":10.378539259978629,"display":{"total":11.801441142651809,"poi_scores":[-2.5367291475222657,56.887664384535412,77.120190959960524],"transition_scores":[0.98868357288679043,0.58447305670049632]}},{"pois":[{"id":1,"name":"P1","category":"museum","lat":45.25,"lon":6.6100000000000003},{"id":4,"name":"P4","category":"park","lat":44.600000000000001,"lon":6.6299999999999999},{"id":3,"name":"P3","category":"museum","lat":44.909999999999997,"lon":7.0599999999999996}],"poi_scores":[-0.36612196829858379,1.7535372612805302,1.159425760754472],"transition_scores":[-1.8287463745325414,-0.84411975880842716],"total":-0.12602507960454989,"distance_km":120.67844539263019,"travel_time_h":24.135689078526038,"display":{"total":10.0,"poi_scores":[-2.5367291475222657,108.14189643076659,77.120190959960524],"transition_scores":[0.10000000000000001,0.7757796107117535]}}]}`;

export const RECOMMEND_DRIVING_BODY =
  `{"schema_version":1,"model_version":"8cc623738bcc","query":{"start_poi":1,"length":3,"mode":"driving","k":10},"radar_scope":"route","truncated":false,"degenerate":{"route_totals":false,"transition_scores":false},"routes":[{"pois":[{"id":1,"name":"P1","category":"museum","lat":45.25,"lon":6.6100000000000003},{"id":5,"name":"P5","category":"museum","lat":45.119999999999997,"lon":7.2000000000000002},{"id":4,"name":"P4","category":"park","lat":44.600000000000001,"lon":6.6299999999999999}],"poi_scores":[-0.36612196829858379,1.4718382095329099,1.7535372612805302],"transition_scores":[-0.64439022155579795,-0.61725536760437594],"total":1.5976079133546823,"distance_km":121.66983617363437,"travel_time_h":3.0417459043408592,"display":{"total":100.0,"poi_scores":[-2.5367291475222657,93.432898192250335,108.14189643076659],"transition_scores":[0.91286015147385591,0.93148363853704763]}},{"pois":[{"id":1,"name":"P1","category":"museum","lat":45.25,"lon":6.6100000000000003},{"id":3,"name":"P3","category":"museum","lat":44.909999999999997,"lon":7.0599999999999996},{"id":4,"name":"P4","category":"park","lat":44.600000000000001,"lon":6.6299999999999999}],"poi_scores":[-0.36612196829858379,1.159425760754472,1.7535372612805302],"transition_scores":[-0.54632970817935433,-0.53142173224690537],"total":1.469089613310159,"distance_km":100.13093896573822,"travel_time_h":2.5032734741434557,"display":{"total":93.289379437934286,"poi_scores":[-2.5367291475222657,77.120190959960524,108.14189643076659],"transition_scores":[0.98016210583651897,0.99039390945755101]}},{"pois":[{"id":1,"name":"P1","category":"museum","lat":45.25,"lon":6.6100000000000003},{"id":2,"name":"P2","category":"park","lat":45.109999999999999,"lon":6.8300000000000001},{"id":5,"name":"P5","category":"museum","lat":45.119999999999997,"lon":7.2000000000000002}],"poi_scores":[-0.36612196829858379,0.77194297923972532,1.4718382095329099],"transition_scores":[-0.53391373242377305,-0.5174254348280044],"total":0.82632005322227409,"distance_km":52.285685361125005,"travel_time_h":1.3071421340281251,"display":{"total":59.726979179750138,"poi_scores":[-2.5367291475222657,56.887664384535412,93.432898192250335],"transition_scores":[0.98868357288679043,1.0]}},{"pois":[{"id":1,"name":"P1","category":"museum","lat":45.25,"lon":6.6100000000000003},{"id":2,"name":"P2","category":"park","lat":45.109999999999999,"lon":6.8300000000000001},{"id":4,"name":"P4","category":"park","lat":44.600000000000001,"lon":6.6299999999999999}],"poi_scores":[-0.36612196829858379,0.77194297923972532,1.7535372612805302],"transition_scores":[-0.53391373242377305,-0.92833719445119167],"total":0.69710734534670715,"distance_km":82.09094952791331,"travel_time_h":2.0522737381978327,"display":{"total":52.980099910030752,"poi_scores":[-2.5367291475222657,56.887664384535412,108.14189643076659],"transition_scores":[0.98868357288679043,0.71797858749651666]}},{"pois":[{"id":1,"name":"P1","category":"museum","lat":45.25,"lon":6.6100000000000003},{"id":3,"name":"P3","category":"museum","lat":44.909999999999997,"lon":7.0599999999999996},{"id":5,"name":"P5","category":"museum","lat":45.119999999999997,"lon":7.2000000000000002}],"poi_scores":[-0.36612196829858379,1.159425760754472,1.4718382095329099],"transition_scores":[-0.54632970817935433,-1.0732260313190531],"total":0.64558626249039053,"distance_km":77.56066991688985,"travel_time_h":1.9390167479222462,"display":{"total":50.289911525374919,"poi_scores":[-2.5367291475222657,77.120190959960524,93.432898192250335],"transition_scores":[0.98016210583651897,0.61853691060965432]}},{"pois":[{"id":1,"name":"P1","category":"museum","lat":45.25,"lon":6.6100000000000003},{"id":5,"name":"P5","category":"museum","lat":45.119999999999997,"lon":7.2000000000000002},{"id":3,"name":"P3","category":"museum","lat":44.909999999999997,"lon":7.0599999999999996}],"poi_scores":[-0.36612196829858379,1.4718382095329099,1.159425760754472],"transition_scores":[-0.64439022155579795,-1.0522200701540958],"total":0.56853171027890426,"distance_km":74.260707308434178,"travel_time_h":1.8565176827108545,"display":{"total":46.266485582983606,"poi_scores":[-2.5367291475222657,93.432898192250335,77.120190959960524],"transition_scores":[0.91286015147385591,0.63295394954805584]}},{"pois":[{"id":1,"name":"P1","category":"museum","lat":45.25,"lon":6.6100000000000003},{"id":5,"name":"P5","category":"museum","lat":45.119999999999997,"lon":7.2000000000000002},{"id":2,"name":"P2","category":"park","lat":45.109999999999999,"lon":6.8300000000000001}],"poi_scores":[-0.36612196829858379,1.4718382095329099,0.77194297923972532],"transition_scores":[-0.64439022155579795,-0.67311787329240458],"total":0.5601511256258489,"distance_km":77.501206553652722,"travel_time_h":1.937530163841318,"display":{"total":45.828890908330706,"poi_scores":[-2.5367291475222657,93.432898192250335,56.887664384535412],"transition_scores":[0.91286015147385591,0.89314347817130679]}},{"pois":[{"id":1,"name":"P1","category":"museum","lat":45.25,"lon":6.6100000000000003},{"id":3,"name":"P3","category":"museum","lat":44.909999999999997,"lon":7.0599999999999996},{"id":2,"name":"P2","category":"park","lat":45.109999999999999,"lon":6.8300000000000001}],"poi_scores":[-0.36612196829858379,1.159425760754472,0.77194297923972532],"transition_scores":[-0.54632970817935433,-0.59416481059821968],"total":0.42475225291803942,"distance_km":80.408180100876535,"travel_time_h":2.0102045025219133,"display":{"total":38.758999235636864,"poi_scores":[-2.5367291475222657,77.120190959960524,56.887664384535412],"transition_scores":[0.98016210583651897,0.94733139988692971]}},{"pois":[{"id":1,"name":"P1","category":"museum","lat":45.25,"lon":6.6100000000000003},{"id":2,"name":"P2","category":"park","lat":45.109999999999999,"lon":6.8300000000000001},{"id":3,"name":"P3","category":"museum","lat":44.909999999999997,"lon":7.0599999999999996}],"poi_scores":[-0.36612196829858379,0.77194297923972532,1.159425760754472],"transition_scores":[-0.53391373242377305,-1.1228578590058478],"total":-0.091524819734007279,"distance_km":51.892696299893146,"travel_time_h":1.2973174074973286,"display":{"total":11.801441142651809,"poi_scores":[-2.5367291475222657,56.887664384535412,77.120190959960524],"transition_scores":[0.98868357288679043,0.58447305670049632]}},{"pois":[{"id":1,"name":"P1","category":"museum","lat":45.25,"lon":6.6100000000000003},{"id":4,"name":"P4","category":"park","lat":44.600000000000001,"lon":6.6299999999999999},{"id":3,"name":"P3","category":"museum","lat":44.909999999999997,"lon":7.0599999999999996}],"poi_scores":[-0.36612196829858379,1.7535372612805302,1.159425760754472],"transition_scores":[-1.8287463745325414,-0.84411975880842716],"total":-0.12602507960454989,"distance_km":120.67844539263019,"travel_time_h":3.0169611348157548,"display":{"total":10.0,"poi_scores":[-2.5367291475222657,108.14189643076659,77.120190959960524],"transition_scores":[0.10000000000000001,0.7757796107117535]}}]}`;

export const RADAR_ROUTE0_ALL_BODY =
  `{"schema_version":1,"model_version":"8cc623738bcc","poi":1,"route":[1,5,4],"checked":[1,5,4],"radar_scope":"route","axes":["popularity","visits","avg_duration","popularity_diff","visits_diff","duration_diff","dist_to_start","same_category_as_start"],"degenerate_axes":[false,false,false,false,false,false,false,false],"pois":[{"id":1,"raw":[33.0,49.0,1847.0,0.0,0.0,0.0,0.0,1.0],"scaled":[10.0,10.0,3.3431952662721893,10.0,10.0,3.3431952662721893,1.0,10.0]},{"id":5,"raw":[10.0,14.0,1231.0,-23.0,-35.0,-616.0,48.446482070199096,1.0],"scaled":[3.1000000000000001,2.8409090909090908,1.0,3.1000000000000001,2.8409090909090908,1.0,7.0311870075439611,10.0]},{"id":4,"raw":[3.0,5.0,3597.0,-30.0,-44.0,1750.0,72.293951105546739,0.0],"scaled":[1.0,1.0,10.0,1.0,1.0,10.0,10.0,1.0]}]}`;

export const RADAR_ROUTE0_SUBSET_BODY =
  `{"schema_version":1,"model_version":"8cc623738bcc","poi":1,"route":[1,5,4],"checked":[1,4],"radar_scope":"route","axes":["popularity","visits","avg_duration","popularity_diff","visits_diff","duration_diff","dist_to_start","same_category_as_start"],"degenerate_axes":[false,false,false,false,false,false,false,false],"pois":[{"id":1,"raw":[33.0,49.0,1847.0,0.0,0.0,0.0,0.0,1.0],"scaled":[10.0,10.0,1.0,10.0,10.0,1.0,1.0,10.0]},{"id":4,"raw":[3.0,5.0,3597.0,-30.0,-44.0,1750.0,72.293951105546739,0.0],"scaled":[1.0,1.0,10.0,1.0,1.0,10.0,10.0,1.0]}]}`;

export const RADAR_ROUTE1_ALL_BODY =
  `{"schema_version":1,"model_version":"8cc623738bcc","poi":1,"route":[1,3,4],"checked":[1,3,4],"radar_scope":"route","axes":["popularity","visits","avg_duration","popularity_diff","visits_diff","duration_diff","dist_to_start","same_category_as_start"],"degenerate_axes":[false,false,false,false,false,false,false,false],"pois":[{"id":1,"raw":[33.0,49.0,1847.0,0.0,0.0,0.0,0.0,1.0],"scaled":[10.0,10.0,4.5026178010471209,10.0,10.0,4.5026178010471209,1.0,10.0]},{"id":3,"raw":[14.0,22.0,732.0,-19.0,-27.0,-1115.0,51.746444678654768,1.0],"scaled":[4.2999999999999998,4.4772727272727266,1.0,4.2999999999999998,4.4772727272727266,1.0,7.4420051053505185,10.0]},{"id":4,"raw":[3.0,5.0,3597.0,-30.0,-44.0,1750.0,72.293951105546739,0.0],"scaled":[1.0,1.0,10.0,1.0,1.0,10.0,10.0,1.0]}]}`;

export const ERROR_BODY =
  `{"code":"unknown_poi","message":"unknown start POI id 77"}`;

export const ALL_BODIES = [
  POIS_BODY,
  RECOMMEND_WALKING_BODY,
  RECOMMEND_DRIVING_BODY,
  RADAR_ROUTE0_ALL_BODY,
  RADAR_ROUTE0_SUBSET_BODY,
  RADAR_ROUTE1_ALL_BODY,
  ERROR_BODY,
];
